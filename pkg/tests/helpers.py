"""Hand-coded closed forms and draw helpers shared across the test suite.

The closed forms below were written out entry by entry, independently of
the library's product construction, so they serve as oracles for it.
"""

import math

import numpy as np

from ckunitary import f_element

C = np.conj
PI = math.pi


def crandn(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_state(n, rng):
    z = crandn(rng, n)
    return z / np.linalg.norm(z)


def random_pair(rng):
    """One normalized complex pair, uniform on its constraint sphere."""
    z = rng.standard_normal(4)
    z /= np.linalg.norm(z)
    return complex(z[0], z[1]), complex(z[2], z[3])


def fdiff(a, b):
    """Frobenius norm of the difference."""
    return float(np.linalg.norm(np.asarray(a) - np.asarray(b)))


def three_dim_closed_form(e, f, a, b, c, d):
    """3x3 matrix entries in terms of the pair abbreviations
    (2,1)=(e,f), (3,1)=(a,b), (3,2)=(c,d)."""
    return np.array(
        [
            [a, b * c, b * d],
            [C(b) * e, -C(a) * c * e - C(d) * C(f), -C(a) * d * e + C(c) * C(f)],
            [C(b) * f, -C(a) * c * f + C(d) * C(e), -C(a) * d * f - C(c) * C(e)],
        ]
    )


def four_dim_closed_form(jv, kv, gv, hv, lv, mv, av, bv, cv, dv, ev, fv):
    """4x4 matrix entries in terms of the pair abbreviations
    (2,1)=(jv,kv), (3,1)=(gv,hv), (3,2)=(lv,mv),
    (4,1)=(av,bv), (4,2)=(cv,dv), (4,3)=(ev,fv)."""
    return np.array(
        [
            [av, bv * cv, bv * dv * ev, bv * dv * fv],
            [
                C(bv) * gv,
                -C(av) * cv * gv + C(dv) * hv * lv,
                -C(av) * dv * ev * gv - C(cv) * ev * hv * lv + C(fv) * hv * mv,
                -C(av) * dv * fv * gv - C(cv) * fv * hv * lv - C(ev) * hv * mv,
            ],
            [
                C(bv) * C(hv) * jv,
                -C(av) * cv * C(hv) * jv - C(dv) * C(gv) * jv * lv + C(dv) * C(kv) * C(mv),
                -C(av) * dv * ev * C(hv) * jv
                + C(cv) * ev * C(gv) * jv * lv
                - C(cv) * ev * C(kv) * C(mv)
                - C(fv) * C(gv) * jv * mv
                - C(fv) * C(kv) * C(lv),
                -C(av) * dv * fv * C(hv) * jv
                + C(cv) * fv * C(gv) * jv * lv
                - C(cv) * fv * C(kv) * C(mv)
                + C(ev) * C(gv) * jv * mv
                + C(ev) * C(kv) * C(lv),
            ],
            [
                C(bv) * C(hv) * kv,
                -C(av) * cv * C(hv) * kv - C(dv) * C(gv) * kv * lv - C(dv) * C(jv) * C(mv),
                -C(av) * dv * ev * C(hv) * kv
                + C(cv) * ev * C(gv) * kv * lv
                + C(cv) * ev * C(jv) * C(mv)
                - C(fv) * C(gv) * kv * mv
                + C(fv) * C(jv) * C(lv),
                -C(av) * dv * fv * C(hv) * kv
                + C(cv) * fv * C(gv) * kv * lv
                + C(cv) * fv * C(jv) * C(mv)
                + C(ev) * C(gv) * kv * mv
                - C(ev) * C(jv) * C(lv),
            ],
        ]
    )


def f_table_three_dim(p):
    """Every entry of the essential 3x3 matrix as one five-angle form."""
    t31, t32, t21 = p.theta[(3, 1)], p.theta[(3, 2)], p.theta[(2, 1)]
    p31, p32, p21 = p.phi[(3, 1)], p.phi[(3, 2)], p.phi[(2, 1)]
    x32, x21 = p.chi[3], p.chi[2]
    F = f_element
    return np.array(
        [
            [
                F(t31, 0.0, 0.0, p31 + PI, 0.0),
                F(t31 - PI / 2, t32, PI, p32, 0.0),
                F(t31 - PI / 2, t32 - PI / 2, PI, x32, 0.0),
            ],
            [
                F(t31 - PI / 2, PI, t21, p21, 0.0),
                F(t31, t32, t21, -p31 + p32 + p21, x32 + x21),
                F(t31, t32 - PI / 2, t21, -p31 + x32 + p21, p32 + x21),
            ],
            [
                F(t31 - PI / 2, PI, t21 - PI / 2, x21, 0.0),
                F(t31, t32, t21 - PI / 2, -p31 + p32 + x21, x32 + p21),
                F(t31, t32 - PI / 2, t21 - PI / 2, -p31 + x32 + x21, p32 + p21),
            ],
        ]
    )


def leading_row_closed_form(p):
    """First row of the essential matrix: the hyperspherical pattern
    cos/sin products of theta_{n,1..n-1} with phases phi_{n,k} and a final
    chi_n."""
    n = p.n
    row = np.empty(n, dtype=np.complex128)
    running = 1.0
    for k in range(1, n):
        theta = p.theta[(n, k)]
        row[k - 1] = running * math.cos(theta) * np.exp(1j * p.phi[(n, k)])
        running *= math.sin(theta)
    row[n - 1] = running * np.exp(1j * p.chi[n])
    return row


def leading_col_closed_form(p):
    """First column of the essential matrix for n >= 3: sines of
    theta_{j,1} with j descending from n, phases phi_{j,1} and a final
    chi_2."""
    n = p.n
    col = np.empty(n, dtype=np.complex128)
    running = 1.0
    for m in range(1, n):
        j = n - m + 1
        col[m - 1] = running * math.cos(p.theta[(j, 1)]) * np.exp(1j * p.phi[(j, 1)])
        running *= math.sin(p.theta[(j, 1)])
    col[n - 1] = running * np.exp(1j * p.chi[2])
    return col


def propagate_three_ports(phase, e, f, a, b, c, d, alpha, beta, gamma):
    """Output coherent parameters of a 3-port written out term by term,
    with the multiport pairs abbreviated as in three_dim_closed_form and a
    global phase in front."""
    ph = np.exp(1j * phase)
    out_a = ph * (a * alpha + b * c * beta + b * d * gamma)
    out_b = ph * (
        C(b) * e * alpha
        + (-C(a) * c * e - C(d) * C(f)) * beta
        + (-C(a) * d * e + C(c) * C(f)) * gamma
    )
    out_c = ph * (
        C(b) * f * alpha
        + (-C(a) * c * f + C(d) * C(e)) * beta
        + (-C(a) * d * f - C(c) * C(e)) * gamma
    )
    return np.array([out_a, out_b, out_c])
