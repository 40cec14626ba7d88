import importlib.util
import os
import pathlib
import shutil
import subprocess
import sys

import pytest


def _cli_path():
    path = os.environ.get("CSF_CLI")
    if path and os.path.exists(path):
        return path
    return shutil.which("csf")


def _load_csftab():
    try:
        import csftab  # installed wheel / editable install

        return csftab
    except ImportError:
        pass
    # Fall back to the extension sitting in the CMake build tree next to the
    # CLI (built with -DCSF_BUILD_PYTHON=ON).
    cli = _cli_path()
    if cli is None:
        return None
    candidates = sorted(pathlib.Path(cli).resolve().parent.glob("_core*.so"))
    if not candidates:
        return None
    pkg_init = pathlib.Path(__file__).resolve().parents[2] / "python" / "csftab" / "__init__.py"
    pkg_spec = importlib.util.spec_from_file_location(
        "csftab", pkg_init, submodule_search_locations=[str(pkg_init.parent)]
    )
    pkg = importlib.util.module_from_spec(pkg_spec)
    sys.modules["csftab"] = pkg
    core_spec = importlib.util.spec_from_file_location("csftab._core", candidates[0])
    core = importlib.util.module_from_spec(core_spec)
    sys.modules["csftab._core"] = core
    core_spec.loader.exec_module(core)
    pkg_spec.loader.exec_module(pkg)
    return pkg


@pytest.fixture(scope="session")
def cli():
    path = _cli_path()
    if path is None:
        pytest.skip("csf CLI not built (set CSF_CLI or put csf on PATH)")

    def run(*args, **kwargs):
        return subprocess.run([path, *args], capture_output=True, text=True, **kwargs)

    return run


@pytest.fixture(scope="session")
def csftab():
    mod = _load_csftab()
    if mod is None:
        pytest.skip("csftab module not built (install the package or build with CSF_BUILD_PYTHON=ON)")
    return mod
