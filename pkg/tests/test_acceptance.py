"""End-to-end checks tying the whole pipeline to its frozen expected values.

Each test covers one headline guarantee of the package; together they pin the
worked examples, the dual construction routes, the exact chart algebra, the
floating point verification layer, and the randomized property suite.
"""

import cmath
import math
import random
import time
from fractions import Fraction

from geomgen import (
    oracle_lattice_points,
    random_delzant_polygon,
    random_simple_non_delzant_polygon,
)
from toricwidth.charts import chart_for_cone, kernel_param, phi_sigma, transition_map
from toricwidth.embedding import (
    sections_by_conditions,
    sections_by_polytope,
)
from toricwidth.fan import is_smooth, normal_fan, polytope_from_support, support_function
from toricwidth.fixtures import (
    blown_up_hirzebruch,
    hirzebruch,
    iterated_plane_blowup,
    projective_space,
    unit_square,
)
from toricwidth.lattice import mat_mul
from toricwidth.numeric import (
    ToricPotential,
    axis_radius_bound,
    potential_partial,
    potential_value,
    pullback_check,
    radial_quantity,
    sup_along_path,
    suggested_path_exponent,
)
from toricwidth.polytope import enumerate_vertices, is_delzant, lattice_points, scale
from toricwidth.width import cylinder_bound, verify_fano_certificate, width_report

TEST_POLYTOPES = [
    projective_space(2, 1),
    unit_square(),
    hirzebruch(),
    blown_up_hirzebruch(),
    scale(iterated_plane_blowup(1), 2),
]


def vertex_for_cone(P, cone):
    for v in enumerate_vertices(P):
        if v.active == tuple(cone):
            return v
    raise AssertionError(f"no vertex with active set {cone}")


def random_torus_point(rng, n):
    return [cmath.rect(rng.uniform(0.5, 2.0), rng.uniform(0, 2 * math.pi)) for _ in range(n)]


def random_disc_point(rng, n):
    return [
        cmath.rect(rng.uniform(0.1, 0.9), rng.uniform(0, 2 * math.pi)) for _ in range(n)
    ]


def test_blown_up_hirzebruch_end_to_end():
    start = time.perf_counter()
    rep = width_report(blown_up_hirzebruch())
    elapsed = time.perf_counter() - start
    assert rep.lu_lambda_pi == 8
    assert rep.lambda_witness == (0, 1, 0, 1, 1, 0)
    assert rep.fano is None
    assert rep.cylinder_pi == 6
    assert rep.radius_sq == 6
    assert rep.min_bound_pi == 6
    assert elapsed < 1.0
    print(
        f"PASS blown-up Hirzebruch: Lambda=8pi, cylinder=6pi, radius^2=6, "
        f"not Fano, {elapsed:.3f}s"
    )


def test_iterated_blowup_family_end_to_end():
    for m in (1, 2, 5, 10):
        start = time.perf_counter()
        rep = width_report(iterated_plane_blowup(m))
        elapsed = time.perf_counter() - start
        assert rep.lu_lambda_pi == 2 * (6 + Fraction(2 * m, m + 1))
        assert rep.fano is None
        assert rep.cylinder_pi == 8
        assert rep.radius_sq == 8
        assert elapsed < 1.0
        print(
            f"PASS blowup family m={m}: Lambda={rep.lu_lambda_pi}pi, "
            f"cylinder=8pi via scale q={rep.denominator_scale}, {elapsed:.3f}s"
        )


def test_projective_space_sanity():
    for n in (1, 2, 3):
        P = projective_space(n, 1)
        rep = width_report(P)
        assert rep.cylinder_pi == 2
        assert rep.lu_lambda_pi == 2
        assert rep.lu_gamma_pi == 2
        assert rep.fano is not None
        assert verify_fano_certificate(P, rep.fano)
    print("PASS projective spaces n=1,2,3: every bound equals 2pi, Fano re-verified")


def test_section_methods_agree_on_every_cone():
    total = 0
    for P in TEST_POLYTOPES:
        F = normal_fan(P)
        g = support_function(P)
        for ci, cone in enumerate(F.max_cones):
            by_conditions = sections_by_conditions(F, g, ci)
            by_polytope = sections_by_polytope(P, vertex_for_cone(P, cone))
            assert by_conditions.exponents == by_polytope.exponents
            total += 1
    print(f"PASS dual section routes agree on all {total} maximal cones of 5 fans")


def test_chart_cocycle_and_kernel_invariance():
    rng = random.Random(2026)
    cones = 0
    for P in TEST_POLYTOPES:
        F = normal_fan(P)
        charts = [chart_for_cone(F, ci) for ci in range(len(F.max_cones))]
        for C1 in charts:
            for C2 in charts:
                E12 = transition_map(C1, C2)
                for C3 in charts:
                    E23 = transition_map(C2, C3)
                    E13 = transition_map(C1, C3)
                    assert mat_mul(E23.exponents, E12.exponents) == E13.exponents
        for C in charts:
            cones += 1
            for _ in range(10):
                z = random_torus_point(rng, len(F.generators))
                alpha = kernel_param(C, random_torus_point(rng, len(C.complement)))
                moved = phi_sigma(C, [a * w for a, w in zip(alpha, z)])
                fixed = phi_sigma(C, z)
                dev = max(
                    abs(a - b) / max(1.0, abs(b)) for a, b in zip(moved, fixed)
                )
                assert dev < 1e-9
    print(
        f"PASS chart algebra: exact cocycles on 5 fans, kernel invariance "
        f"< 1e-9 at 10 points for each of {cones} charts"
    )


def test_pullback_identity_and_gradient():
    rng = random.Random(3001)
    potentials = {
        "projective plane": ToricPotential(
            sections_by_polytope(
                projective_space(2, 1), enumerate_vertices(projective_space(2, 1))[0]
            )
        ),
        "blown-up Hirzebruch": ToricPotential(
            sections_by_polytope(
                blown_up_hirzebruch(), enumerate_vertices(blown_up_hirzebruch())[0]
            )
        ),
    }
    for label, T in potentials.items():
        worst = 0.0
        for _ in range(20):
            xi = random_disc_point(rng, T.dim)
            worst = max(worst, pullback_check(T, xi))
        assert worst < 1e-4
        worst_grad = 0.0
        for _ in range(20):
            x = [rng.uniform(0.1, 3.0) for _ in range(T.dim)]
            for j in range(T.dim):
                h = 1e-6 * x[j]
                xp, xm = list(x), list(x)
                xp[j] += h
                xm[j] -= h
                fd = (potential_value(T, xp) - potential_value(T, xm)) / (2 * h)
                a = potential_partial(T, x, j)
                worst_grad = max(worst_grad, abs(a - fd) / max(1.0, abs(a)))
        assert worst_grad < 1e-5
        print(
            f"PASS pullback for {label}: form deviation {worst:.2e} < 1e-4, "
            f"gradient deviation {worst_grad:.2e} < 1e-5"
        )


def test_path_supremum_and_radial_bound():
    rng = random.Random(4001)
    for P in TEST_POLYTOPES:
        T = ToricPotential(sections_by_polytope(P, enumerate_vertices(P)[0]))
        for j in range(T.dim):
            s = suggested_path_exponent(T, j)
            sup = sup_along_path(T, j, s, 1e9)
            assert abs(sup - axis_radius_bound(T, j)) < 1e-3
        for _ in range(100):
            x = [rng.uniform(0.1, 3.0) for _ in range(T.dim)]
            for j in range(T.dim):
                assert radial_quantity(T, x, j) <= axis_radius_bound(T, j) + 1e-12
    print(
        "PASS radial analysis: path supremum within 1e-3 of sqrt(2 max) on "
        "every axis of 5 embeddings; bound holds at 100 random points each"
    )


def test_random_polygon_property_suite():
    rng = random.Random(50_000)
    for _ in range(50):
        P = random_delzant_polygon(rng)
        F = normal_fan(P)
        assert is_delzant(P) and is_smooth(F)
        assert list(lattice_points(P)) == oracle_lattice_points(P)
        g = support_function(P)
        Q = polytope_from_support(F, g)
        assert Q.normals == P.normals and Q.offsets == P.offsets
        v = enumerate_vertices(P)[0]
        base = cylinder_bound(sections_by_polytope(P, v)).coefficient_pi
        for q in (2, 3):
            Pq = scale(P, q)
            vq = next(
                w
                for w in enumerate_vertices(Pq)
                if w.point == tuple(q * c for c in v.point)
            )
            scaled = cylinder_bound(sections_by_polytope(Pq, vq)).coefficient_pi
            assert scaled == q * base
    for _ in range(10):
        P = random_simple_non_delzant_polygon(rng)
        assert not is_delzant(P) and not is_smooth(normal_fan(P))
    print(
        "PASS property suite: 50 random Delzant polygons (smoothness, lattice "
        "oracle, support round-trip, linear scaling) and 10 non-Delzant rejections"
    )
