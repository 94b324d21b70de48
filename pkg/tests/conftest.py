import numpy as np
import pytest

from agdim import kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger JIT compilation once so timed acceptance tests measure the
    checks themselves, not compiler startup."""
    kernels.dmax_values(np.array([1, 16, 17], dtype=np.int64))
    kernels.piecewise_mismatches(1, 64)
    kernels.f_bound_violations(2, 64)
    D = np.zeros(33, dtype=np.int64)
    D[1:] = kernels.dmax_values(np.arange(1, 33, dtype=np.int64))
    kernels.superadditivity_scan(D)
    kernels.mdsp_table(kernels.best_indec_table(32))
    kernels.pair_efficiency_mismatches(2, 8)
