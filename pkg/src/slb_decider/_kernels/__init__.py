"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python
fallback has identical semantics. SLB_DECIDER_KERNEL=python|compiled
forces a backend (forcing `compiled` fails loudly if it was not built).
"""

from __future__ import annotations

import os

from . import cashflow_py

_forced = os.environ.get("SLB_DECIDER_KERNEL", "auto").lower()

if _forced == "python":
    impl = cashflow_py
elif _forced in ("auto", "compiled"):
    try:
        from . import cashflow_cy as impl  # type: ignore[no-redef]
    except ImportError:
        if _forced == "compiled":
            raise ImportError(
                "SLB_DECIDER_KERNEL=compiled but the compiled kernel extension "
                "is not built; reinstall without SLB_DECIDER_NO_EXT or use the "
                "python backend"
            )
        impl = cashflow_py
else:
    raise ValueError(
        f"SLB_DECIDER_KERNEL must be 'auto', 'python' or 'compiled', got {_forced!r}"
    )

BACKEND: str = impl.BACKEND

annuity_payment = impl.annuity_payment
amortization_columns = impl.amortization_columns
interest_pv = impl.interest_pv
level_pv = impl.level_pv
stream_pv = impl.stream_pv
