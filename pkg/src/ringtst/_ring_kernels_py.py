"""Pure-Python twin of the compiled Metropolis kernel.

Same operation order and the same libm calls as the Cython version, so the
two backends produce identical chains from identical variate streams.
"""
from math import cosh


def _pot(code: int, pa: float, pb: float, x: float) -> float:
    if code == 0:
        return 0.0
    if code == 1:
        return pa * x * x
    if code == 2:
        s = cosh(x / pb)
        return pa / (s * s)
    u = (x / pb) * (x / pb) - 1.0
    return pa * u * u


def run_sweeps(
    q,
    eps,
    spring,
    pot_code,
    pa,
    pb,
    step_bead,
    step_trans,
    bead_prop,
    bead_logu,
    trans_prop,
    trans_logu,
):
    """Run len(bead_prop) sweeps in place; returns (bead_acc, trans_acc)."""
    n_sweeps = bead_prop.shape[0]
    P = q.shape[0]
    bead_acc = 0
    trans_acc = 0
    for s in range(n_sweeps):
        for k in range(P):
            x_old = q[k]
            x_new = x_old + step_bead * bead_prop[s, k]
            ql = q[(k + P - 1) % P]
            qr = q[(k + 1) % P]
            dlog = -eps * (_pot(pot_code, pa, pb, x_new) - _pot(pot_code, pa, pb, x_old))
            dlog -= spring * (
                (x_new - ql) * (x_new - ql)
                + (x_new - qr) * (x_new - qr)
                - (x_old - ql) * (x_old - ql)
                - (x_old - qr) * (x_old - qr)
            )
            if bead_logu[s, k] < dlog:
                q[k] = x_new
                bead_acc += 1
        shift = step_trans * trans_prop[s]
        dv = 0.0
        if pot_code != 0:
            for k in range(P):
                dv += _pot(pot_code, pa, pb, q[k] + shift) - _pot(pot_code, pa, pb, q[k])
        dlog = -eps * dv
        if trans_logu[s] < dlog:
            for k in range(P):
                q[k] = q[k] + shift
            trans_acc += 1
    return bead_acc, trans_acc
