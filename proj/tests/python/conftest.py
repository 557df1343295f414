import os
import sys

# Under ctest the freshly built module is staged in the build tree; an
# editable install's import hook would otherwise shadow it.
_stage = os.environ.get("QCLIFF_PY_STAGE")
if _stage:
    sys.meta_path[:] = [f for f in sys.meta_path if not type(f).__module__.startswith("_editable_skbc_")]
    sys.path.insert(0, _stage)
