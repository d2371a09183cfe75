"""Shared term grammar for the univariate and multivariate text formats."""

import re

_SPLIT = re.compile(r"([+-])")


class ParseError(ValueError):
    pass


def parse_terms(text, var_names):
    """Yield ``(coeff, exps)`` for each term of ``text``.

    Terms look like ``c*x1^a*y^e``; ``**`` is accepted for ``^``, the
    coefficient may be omitted or appear anywhere among the factors.
    """
    s = text.replace(" ", "").replace("\t", "").replace("**", "^")
    if not s:
        raise ParseError("empty polynomial")
    index = {name: k for k, name in enumerate(var_names)}
    pieces = _SPLIT.split(s)
    sign = 1
    expect_term = True
    for piece in pieces:
        if piece in ("+", "-"):
            if piece == "-":
                sign = -sign
            expect_term = True
            continue
        if piece == "":
            continue
        if not expect_term:
            raise ParseError("missing operator before %r" % piece)
        coeff = sign
        exps = [0] * len(var_names)
        for factor in piece.split("*"):
            if not factor:
                raise ParseError("dangling '*' in %r" % piece)
            if factor.isdigit():
                coeff *= int(factor)
                continue
            name, _, exp = factor.partition("^")
            if name not in index:
                raise ParseError("unknown variable %r" % name)
            if exp and not exp.isdigit():
                raise ParseError("bad exponent in %r" % factor)
            exps[index[name]] += int(exp) if exp else 1
        yield coeff, tuple(exps)
        sign = 1
        expect_term = False
    if expect_term:
        raise ParseError("trailing operator in %r" % text)


def format_term(coeff, exps, var_names):
    factors = []
    for name, e in zip(var_names, exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append("%s^%d" % (name, e))
    if not factors:
        return str(coeff)
    if coeff == 1:
        return "*".join(factors)
    return "%d*%s" % (coeff, "*".join(factors))
