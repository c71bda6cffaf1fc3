"""Python bindings for the knotcert C++ core."""

import json as _json

try:
    from . import _knotcert as _k
except ImportError:  # in-tree build: the extension sits next to the package
    import _knotcert as _k

InputError = _k.InputError
MathError = _k.MathError
InvariantViolation = _k.InvariantViolation


def _poly(parts):
    min_exp, coeffs = parts
    return min_exp, [int(c) for c in coeffs]


def p_poly(p):
    """Ascending coefficients of the Alexander polynomial of T(p, p+1)."""
    return _poly(_k.p_poly(p))


def cyclotomic(n):
    return _poly(_k.cyclotomic(n))


def alexander_polynomial(presentation_text):
    return _poly(_k.alexander_polynomial(presentation_text))


def presentation(p, form="gamma"):
    return _k.presentation(p, form)


def certificate(p, k):
    return _json.loads(_k.certificate_json(p, k))


def certificate_json(p, k):
    return _k.certificate_json(p, k)


def gamma(p):
    return _json.loads(_k.gamma_json(p))


def normal_form(p, q, word, convention="power"):
    return _json.loads(_k.normal_form_json(p, q, word, convention))


def fold(p):
    return _json.loads(_k.fold_json(p))


def run_cli(args):
    return _k.run_cli(list(args))


def run_acceptance(seed=None):
    return _k.run_acceptance() if seed is None else _k.run_acceptance(seed)
