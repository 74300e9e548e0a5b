#!/usr/bin/env python3
"""Smoke test for the exthyp_py extension module.

Build the module first, then run this script from the repository root:

    cargo build --release -p exthyp-py
    python3 python/smoke_test.py

The script loads the cdylib straight out of the cargo target directory,
so no installation step is needed.
"""
import importlib.machinery
import importlib.util
import math
import sys
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        REPO_ROOT / "target" / "release" / "libexthyp_py.so",
        REPO_ROOT / "target" / "debug" / "libexthyp_py.so",
        REPO_ROOT / "target" / "release" / "exthyp_py.dll",
        REPO_ROOT / "target" / "release" / "libexthyp_py.dylib",
    ]
    for path in candidates:
        if path.exists():
            loader = importlib.machinery.ExtensionFileLoader("exthyp_py", str(path))
            spec = importlib.util.spec_from_loader("exthyp_py", loader)
            module = importlib.util.module_from_spec(spec)
            loader.exec_module(module)
            return module, path
    sys.exit(
        "exthyp_py not built; run `cargo build --release -p exthyp-py` first"
    )


CHECKS = []


def check(name):
    def register(fn):
        CHECKS.append((name, fn))
        return fn

    return register


@check("log_gamma(5) = ln 24")
def _(m):
    assert abs(m.log_gamma(5.0) - math.log(24.0)) < 1e-13


@check("gamma_p(0.5, 1) = sqrt(pi) e^-2")
def _(m):
    value, err = m.gamma_p(0.5, 1.0)
    expected = math.sqrt(math.pi) * math.exp(-2.0)
    assert abs(value - expected) / expected < 1e-9
    assert err >= 0.0


@check("gamma_p reduces to gamma at p = 0")
def _(m):
    value, _ = m.gamma_p(1.5, 0.0)
    assert value == m.gamma(1.5)


@check("ext_pochhammer classical dispatch")
def _(m):
    assert m.ext_pochhammer(2.5, 0.0, 4) == m.pochhammer(2.5, 4) == 216.5625


@check("2F1(1,1;2;1/2) = 2 ln 2")
def _(m):
    r = m.gauss_2f1(1.0, 0.0, 1.0, 2.0, 0.5)
    assert r["converged"]
    assert abs(r["value"] - 2.0 * math.log(2.0)) < 1e-9


@check("1F1(1;1;1) = e")
def _(m):
    r = m.kummer_1f1(1.0, 0.0, 1.0, 1.0)
    assert abs(r["value"] - math.e) < 1e-10


@check("ext_hyper argument-zero law")
def _(m):
    r = m.ext_hyper([1.0, 1.0], [2.0], 0.7, 0.0)
    assert r["value"] == 1.0 and r["terms_used"] == 1


@check("kernel substitution identity")
def _(m):
    b, u = 2.0, 1.0
    z = b * (math.cosh(u) - 1.0)
    assert abs(m.kernel(z, b) - b * math.exp(u)) < 1e-12


@check("base integral: quadrature matches closed form")
def _(m):
    closed = m.oberhettinger_closed(1.0, 2.0, 1.0)
    value, err, evals, converged = m.oberhettinger_numeric(1.0, 2.0, 1.0)
    assert converged and evals > 0
    assert abs(closed - 1.0 / 3.0) < 1e-12
    assert abs(value - closed) < 1e-9


@check("kernel-damped identity verifies (p = 0.5)")
def _(m):
    r = m.verify_identity("T1", [1.0, 1.0], [2.0], 0.5, 1.0, 2.0, 1.0, 0.5)
    assert r["verdict"] == "pass", r


@check("z-weighted identity: corrected passes, printed is flagged")
def _(m):
    corrected = m.verify_identity(
        "T2", [1.0, 1.0], [2.0], 0.0, 1.0, 2.5, 1.0, 0.5, variant="corrected"
    )
    assert corrected["verdict"] == "pass", corrected
    printed = m.verify_identity(
        "T2", [1.0, 1.0], [2.0], 0.0, 1.0, 2.5, 1.0, 0.5, variant="printed"
    )
    assert printed["errata_note"] is not None
    assert printed["verdict"] == "fail"


@check("domain errors raise ValueError")
def _(m):
    try:
        m.log_gamma(-1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


def main():
    module, path = load_module()
    print(f"loaded {path}")
    failures = 0
    for name, fn in CHECKS:
        try:
            fn(module)
        except Exception as exc:  # noqa: BLE001 - report and continue
            failures += 1
            print(f"FAIL  {name}: {exc}")
        else:
            print(f"ok    {name}")
    if failures:
        sys.exit(f"{failures} of {len(CHECKS)} checks failed")
    print(f"all {len(CHECKS)} checks passed")


if __name__ == "__main__":
    main()
