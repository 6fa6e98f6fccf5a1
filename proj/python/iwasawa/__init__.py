"""p-adic arithmetic and Iwasawa algebra computations."""

import json as _json

from ._iwasawa import (
    Context,
    Element,
    IwasawaError,
    Series,
    commands,
    constant_quotient_order,
    coprime_to_cyclotomic,
    divides,
    evaluate,
    hecke_roots,
    iwasawa_log,
    mu_lambda,
    nth_root,
    omega,
    order_of_vanishing_at_zero,
    run,
    teichmuller,
    weierstrass_divide,
    weierstrass_prepare,
)


def run_json(command, payload, **options):
    """Like run() but takes and returns Python objects."""
    code, report = run(command, _json.dumps(payload), **options)
    return code, _json.loads(report)


__all__ = [name for name in dir() if not name.startswith("_")]
