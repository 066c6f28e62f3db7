"""Lambert-Tsallis W_q function and the exponential equations it solves.

Submodules are imported on first attribute access, so ``lambert_tsallis.oracle``
can be used without loading the W_q evaluator.
"""

from importlib import import_module

__version__ = "0.1.0"

_EXPORTS = {
    "QValue": "qdeform",
    "exp_q": "qdeform",
    "exp_q_real": "qdeform",
    "ln_q": "qdeform",
    "qpow_transform": "qdeform",
    "PRINCIPAL": "wq_core",
    "SECONDARY": "wq_core",
    "BranchLabel": "wq_core",
    "WqResult": "wq_core",
    "BranchPoint": "wq_core",
    "branch_point": "wq_core",
    "wq": "wq_core",
    "wq_closed_form": "wq_core",
    "wq_eval_real": "wq_core",
    "wq_eval_complex": "wq_core",
    "Trinomial": "trinomial",
    "RootRecord": "trinomial",
    "RootSet": "trinomial",
    "Formula": "trinomial",
    "solve_trinomial": "trinomial",
    "solve_degenerate": "trinomial",
    "residual": "trinomial",
    "FermatProblem": "expo",
    "FibonacciQuery": "expo",
    "solve_fermat": "expo",
    "solve_fibonacci": "expo",
    "fibonacci_number": "expo",
    "fibonacci_sweep": "expo",
    "scan_real_roots": "oracle",
    "poly_roots_all": "oracle",
}

__all__ = sorted(_EXPORTS)


def __getattr__(name):
    mod = _EXPORTS.get(name)
    if mod is None:
        raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
    value = getattr(import_module(f".{mod}", __name__), name)
    globals()[name] = value
    return value


def __dir__():
    return sorted(list(globals()) + __all__)
