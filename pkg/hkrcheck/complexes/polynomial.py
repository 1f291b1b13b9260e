#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

from fractions import Fraction
from typing import Callable, Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

from ..core.matrix import ONE, ZERO
from ..core.rational import RationalLike, format_rational, parse_rational

Exponent = Tuple[int, ...]


class Polynomial:
    """
    Polynomial in a fixed number of variables with exact coefficients,
    stored as {exponent tuple: Fraction} without zero terms.
    """

    __slots__ = ("_nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponent, RationalLike]] = None) -> None:
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        self._nvars: int = nvars
        self._terms: Dict[Exponent, Fraction] = dict()
        if terms:
            for exponent, coeff in terms.items():
                exponent = tuple(exponent)
                if len(exponent) != nvars or any(e < 0 for e in exponent):
                    raise ValueError("bad exponent %r for %d variables" % (exponent, nvars))
                value = parse_rational(coeff)
                if value != 0:
                    self._terms[exponent] = self._terms.get(exponent, ZERO) + value
            self._terms = {e: c for e, c in self._terms.items() if c != 0}

    @classmethod
    def _from_clean(cls, nvars: int, terms: Dict[Exponent, Fraction]) -> "Polynomial":
        out = cls.__new__(cls)
        out._nvars = nvars
        out._terms = terms
        return out

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._from_clean(nvars, dict())

    @classmethod
    def constant(cls, nvars: int, value: RationalLike) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ValueError("variable index %d out of range" % index)
        exponent = tuple(1 if i == index else 0 for i in range(nvars))
        return cls._from_clean(nvars, {exponent: ONE})

    @classmethod
    def linear(cls, coefficients: Sequence[RationalLike]) -> "Polynomial":
        """The linear form sum_i coefficients[i] * x_i."""
        n = len(coefficients)
        terms = dict()
        for i, value in enumerate(coefficients):
            terms[tuple(1 if j == i else 0 for j in range(n))] = value
        return cls(n, terms)

    @property
    def nvars(self) -> int:
        return self._nvars

    def terms(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self._terms.get(tuple(exponent), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> Optional[int]:
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_degree(self) -> Optional[int]:
        """Degree of a non-zero homogeneous polynomial, None for zero."""
        degrees = {sum(e) for e in self._terms}
        if len(degrees) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degrees.pop() if degrees else None

    # arithmetic

    def _check(self, other: "Polynomial") -> None:
        if other._nvars != self._nvars:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self._terms)
        for exponent, coeff in other._terms.items():
            value = terms.get(exponent, ZERO) + coeff
            if value:
                terms[exponent] = value
            else:
                terms.pop(exponent, None)
        return Polynomial._from_clean(self._nvars, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial._from_clean(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "Polynomial":
        value = parse_rational(factor)
        if value == 0:
            return Polynomial.zero(self._nvars)
        return Polynomial._from_clean(self._nvars, {e: c * value for e, c in self._terms.items()})

    def __mul__(self, other: Union["Polynomial", int, Fraction]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        terms: Dict[Exponent, Fraction] = dict()
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                terms[exponent] = terms.get(exponent, ZERO) + c1 * c2
        return Polynomial._from_clean(self._nvars, {e: c for e, c in terms.items() if c != 0})

    __rmul__ = __mul__

    def times_monomial(self, exponent: Exponent) -> Dict[Exponent, Fraction]:
        """Terms of self * x^exponent, the hot path of degree evaluation."""
        return {
            tuple(a + b for a, b in zip(e, exponent)): c for e, c in self._terms.items()
        }

    def substitute(
        self, images: Sequence["Polynomial"], target_nvars: Optional[int] = None
    ) -> "Polynomial":
        """Replace x_i by images[i] (all images in one common ring)."""
        if len(images) != self._nvars:
            raise ValueError("need one image per variable")
        if target_nvars is not None:
            target = target_nvars
        elif self._nvars > 0:
            target = images[0].nvars
        else:
            raise ValueError("target_nvars is required for constant polynomials")
        result = Polynomial.zero(target)
        powers: Dict[Tuple[int, int], Polynomial] = dict()

        def power(index: int, exponent: int) -> Polynomial:
            key = (index, exponent)
            if key not in powers:
                if exponent == 0:
                    powers[key] = Polynomial.constant(target, 1)
                else:
                    powers[key] = power(index, exponent - 1) * images[index]
            return powers[key]

        for exponent, coeff in self._terms.items():
            term = Polynomial.constant(target, coeff)
            for index, e in enumerate(exponent):
                if e:
                    term = term * power(index, e)
            result = result + term
        return result

    # protocol

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = list()
        for exponent in sorted(self._terms, reverse=True):
            coeff = self._terms[exponent]
            monomial = "*".join(
                "x%d^%d" % (i + 1, e) if e > 1 else "x%d" % (i + 1)
                for i, e in enumerate(exponent)
                if e
            )
            if not monomial:
                parts.append(format_rational(coeff))
            elif coeff == 1:
                parts.append(monomial)
            else:
                parts.append("%s*%s" % (format_rational(coeff), monomial))
        return " + ".join(parts)


class PolynomialMatrix:
    """
    Matrix of polynomials over one ring, stored row-major.

    Column j is the image of the j-th source generator, so a map from a
    module of rank c to a module of rank r is an r x c matrix.
    """

    __slots__ = ("_nvars", "_rows", "_cols", "_entries")

    def __init__(
        self, nvars: int, rows: int, cols: int, entries: Sequence[Polynomial]
    ) -> None:
        if len(entries) != rows * cols:
            raise ValueError(
                "expected %d entries for a %dx%d matrix, got %d"
                % (rows * cols, rows, cols, len(entries))
            )
        for entry in entries:
            if entry.nvars != nvars:
                raise ValueError("matrix entry lives in a ring with %d variables" % entry.nvars)
        self._nvars = nvars
        self._rows = rows
        self._cols = cols
        self._entries: Tuple[Polynomial, ...] = tuple(entries)

    @classmethod
    def from_rows(
        cls, nvars: int, rows: Sequence[Sequence[Polynomial]], cols: Optional[int] = None
    ) -> "PolynomialMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = list()
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged polynomial matrix")
            entries.extend(row)
        return cls(nvars, len(rows), cols, entries)

    @classmethod
    def zeros(cls, nvars: int, rows: int, cols: int) -> "PolynomialMatrix":
        zero = Polynomial.zero(nvars)
        return cls(nvars, rows, cols, [zero] * (rows * cols))

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        return (self._rows, self._cols)

    def entry(self, i: int, j: int) -> Polynomial:
        return self._entries[i * self._cols + j]

    def nonzero_entries(self) -> Iterator[Tuple[int, int, Polynomial]]:
        for index, entry in enumerate(self._entries):
            if not entry.is_zero():
                yield index // self._cols, index % self._cols, entry

    def is_zero(self) -> bool:
        return all(entry.is_zero() for entry in self._entries)

    def transpose(self) -> "PolynomialMatrix":
        return PolynomialMatrix(
            self._nvars,
            self._cols,
            self._rows,
            [self.entry(i, j) for j in range(self._cols) for i in range(self._rows)],
        )

    def scale(self, factor: RationalLike) -> "PolynomialMatrix":
        return PolynomialMatrix(
            self._nvars, self._rows, self._cols, [e.scale(factor) for e in self._entries]
        )

    def map_entries(
        self, function: Callable[[Polynomial], Polynomial], nvars: Optional[int] = None
    ) -> "PolynomialMatrix":
        """Apply function entrywise; nvars names the target ring when it changes."""
        entries = [function(e) for e in self._entries]
        if nvars is None:
            nvars = self._nvars
        return PolynomialMatrix(nvars, self._rows, self._cols, entries)

    def __matmul__(self, other: "PolynomialMatrix") -> "PolynomialMatrix":
        if self._cols != other._rows:
            raise ValueError("cannot compose %dx%d with %dx%d" % (*self.shape, *other.shape))
        entries = list()
        for i in range(self._rows):
            for j in range(other._cols):
                total = Polynomial.zero(self._nvars)
                for k in range(self._cols):
                    left = self.entry(i, k)
                    if left.is_zero():
                        continue
                    right = other.entry(k, j)
                    if not right.is_zero():
                        total = total + left * right
                entries.append(total)
        return PolynomialMatrix(self._nvars, self._rows, other._cols, entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolynomialMatrix):
            return NotImplemented
        return (
            self._nvars == other._nvars
            and self.shape == other.shape
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self._nvars, self.shape, self._entries))

    def __repr__(self) -> str:
        rows = [
            "[" + ", ".join(repr(self.entry(i, j)) for j in range(self._cols)) + "]"
            for i in range(self._rows)
        ]
        return "PolynomialMatrix(%dx%d: [%s])" % (self._rows, self._cols, ", ".join(rows))
