# Integer Laurent polynomials with normalization up to units +-t^k.


class LaurentPolynomial:
    """An integer Laurent polynomial, stored as {exponent: coefficient}.

    Zero coefficients are never stored; the empty dictionary is the zero
    polynomial.  Instances are immutable and hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        cleaned = {}
        if coeffs:
            for exp, coeff in coeffs.items():
                if coeff != 0:
                    cleaned[int(exp)] = int(coeff)
        self._coeffs = cleaned

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, coeff, exp):
        return cls({exp: coeff})

    @classmethod
    def variable(cls):
        """The polynomial t."""
        return cls({1: 1})

    @property
    def coefficients(self):
        return dict(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def degree(self):
        """Top exponent; raises on the zero polynomial."""
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self._coeffs)

    def valuation(self):
        """Bottom exponent; raises on the zero polynomial."""
        if not self._coeffs:
            raise ValueError("zero polynomial has no valuation")
        return min(self._coeffs)

    def __getitem__(self, exp):
        return self._coeffs.get(exp, 0)

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._coeffs)
        for exp, coeff in other._coeffs.items():
            out[exp] = out.get(exp, 0) + coeff
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                exp = e1 + e2
                out[exp] = out.get(exp, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self.key())

    def key(self):
        """Canonical hashable form: sorted (exponent, coefficient) pairs."""
        return tuple(sorted(self._coeffs.items()))

    def normalize_units(self):
        """Canonical representative modulo units +-t^k.

        The lowest exponent becomes 0 and the top coefficient positive.
        """
        if not self._coeffs:
            return LaurentPolynomial.zero()
        shift = self.valuation()
        sign = 1 if self._coeffs[self.degree()] > 0 else -1
        return LaurentPolynomial(
            {e - shift: sign * c for e, c in self._coeffs.items()}
        )

    def equals_up_to_units(self, other):
        return self.normalize_units() == _coerce(other).normalize_units()

    def __call__(self, value):
        """Evaluate at a nonzero point; exact for int/Fraction inputs."""
        from fractions import Fraction

        if isinstance(value, int) and any(e < 0 for e in self._coeffs):
            value = Fraction(value)
        return sum(c * value ** e for e, c in self._coeffs.items())

    def __repr__(self):
        return f"LaurentPolynomial({self._coeffs!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for exp in sorted(self._coeffs, reverse=True):
            coeff = self._coeffs[exp]
            if exp == 0:
                term = str(abs(coeff))
            else:
                tpow = "t" if exp == 1 else f"t^{exp}"
                term = tpow if abs(coeff) == 1 else f"{abs(coeff)}*{tpow}"
            if not parts:
                parts.append(term if coeff > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if coeff > 0 else f"- {term}")
        return " ".join(parts)


def _coerce(value):
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, int):
        return LaurentPolynomial.constant(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to LaurentPolynomial")
