import json
import os
import subprocess
import sys

import pytest

from projrich import _kernels, _pykernels
from projrich.coxeter import weyl_group
from projrich.root_data import build_root_system

SNIPPET = """
import json
from projrich import _kernels
from projrich.coxeter import weyl_group
from projrich.root_data import build_root_system
W = weyl_group(build_root_system("B", 3))
A = W.affine
xs = A.elements_up_to(3)
print(json.dumps({
    "backend": _kernels.BACKEND,
    "mul": W.mul_table,
    "cones": [list(c) for c in W._cones],
    "lengths": [A.length(x) for x in xs],
}))
"""


def _run(pure: bool):
    env = dict(os.environ)
    env.pop("PROJRICH_PURE_PYTHON", None)
    if pure:
        env["PROJRICH_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", SNIPPET], env=env, capture_output=True,
                         text=True, check=True)
    return json.loads(out.stdout)


def test_env_var_forces_fallback():
    assert _run(True)["backend"] == "python"


def test_backends_agree():
    a, b = _run(True), _run(False)
    assert {k: v for k, v in a.items() if k != "backend"} == {k: v for k, v in b.items() if k != "backend"}


@pytest.mark.skipif(_kernels.BACKEND != "cython", reason="compiled kernels not built")
def test_compiled_kernels_directly():
    from projrich import _ckernels
    W = weyl_group(build_root_system("C", 3))
    right, parent = W._right, W._parent
    assert _ckernels.mul_table(right, parent) == _pykernels.mul_table(right, parent)
    assert _ckernels.bruhat_cones(right, parent) == _pykernels.bruhat_cones(right, parent)
    A = W.affine
    for x in A.elements_up_to(3):
        args = (x.chi, A._inv_mask[x.w.index], A._pos_flat, W.rank)
        assert _ckernels.im_length(*args) == _pykernels.im_length(*args)
