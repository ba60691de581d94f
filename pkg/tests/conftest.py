import functools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import degentensor.classify as _classify  # noqa: E402
import degentensor.degeneracy as _degeneracy  # noqa: E402

import suite_state  # noqa: E402


def _recording(fn, certificate_of):
    @functools.wraps(fn)
    def wrapper(a, *args, **kwargs):
        out = fn(a, *args, **kwargs)
        cert = certificate_of(out)
        if cert is not None:
            suite_state.CERTIFICATES.append((a, cert))
        return out
    return wrapper


# every certificate the library hands out is logged for the duality criterion
_degeneracy.decide_degeneracy = _recording(_degeneracy.decide_degeneracy, lambda v: v.certificate)
_classify.decide_degeneracy = _degeneracy.decide_degeneracy
for _name in ("certificate_from_point", "kernel_triple_through"):
    setattr(_degeneracy, _name, _recording(getattr(_degeneracy, _name), lambda t: t))


def pytest_collection_modifyitems(items):
    # the acceptance module checks suite-wide facts, so it runs last
    items.sort(key=lambda item: item.module.__name__ == "test_acceptance")


def pytest_terminal_summary(terminalreporter):
    if not suite_state.ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, (ok, detail) in sorted(suite_state.ACCEPTANCE.items()):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
