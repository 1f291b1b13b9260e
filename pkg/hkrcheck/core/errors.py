#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

from typing import Optional


class DependentFormsError(ValueError):
    """A list of linear forms that must be independent is not."""


class NonHomogeneousError(ValueError):
    pass


class NotFiniteOrderError(ValueError):
    def __init__(self, bound: int) -> None:
        super().__init__("matrix^k != identity for every 1 <= k <= %d" % bound)
        self.bound = bound

    def __reduce__(self):
        return (type(self), (self.bound,))


class GroupClosureError(ValueError):
    def __init__(self, bound: int) -> None:
        super().__init__(
            "group closure exceeded %d elements (infinite group?)" % bound
        )
        self.bound = bound

    def __reduce__(self):
        return (type(self), (self.bound,))


class NotAGroupError(ValueError):
    """A Reynolds or Molien average came out non-integral."""


class InstanceFormatError(ValueError):
    def __init__(self, field: Optional[str], message: str) -> None:
        if field:
            super().__init__("%s: %s" % (field, message))
        else:
            super().__init__(message)
        self.field = field
        self.message = message

    def __reduce__(self):
        return (type(self), (self.field, self.message))


class IncompatibleCommandError(ValueError):
    pass
