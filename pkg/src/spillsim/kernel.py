"""Selects the simulation core flavor and re-exports its names.

The core lives in _kernel.py (and _fctstep.py for the completion-model
reference), written in Cython pure-Python mode: one source that either
compiles to an extension or runs interpreted. A built extension shadows
the .py on import. Set SPILLSIM_PURE=1 to force the interpreted source
even when the extension exists; FLAVOR says which one actually loaded.
"""

import importlib
import importlib.util
import os


def _load(stem):
    if os.environ.get("SPILLSIM_PURE") == "1":
        here = os.path.dirname(os.path.abspath(__file__))
        name = "spillsim._pure_" + stem.lstrip("_")
        spec = importlib.util.spec_from_file_location(
            name, os.path.join(here, stem + ".py"))
        mod = importlib.util.module_from_spec(spec)
        spec.loader.exec_module(mod)
        return mod
    return importlib.import_module("spillsim." + stem)


_core = _load("_kernel")
_step = _load("_fctstep")

FLAVOR = "compiled" if _core.COMPILED else "pure"

globals().update({
    n: v for n, v in vars(_core).items()
    if not n.startswith("_") and n not in ("cython", "heapq", "deque")
})
globals().update(_core.EXPORTED_CONSTANTS)
completion_step = _step.completion_step
STEP_COMPILED = bool(_step.COMPILED)
