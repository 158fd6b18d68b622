import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.linalg import expm

from qwalk import graph as gr
from qwalk.evolution import transition_entries
from qwalk.hamiltonian import Kind, build
from qwalk.periodicity import (CorollaryViolation, SupportClass, SupportClassification,
                               classify_support, is_periodic, minimal_period, period_gcd,
                               squarefree_decomposition)
from qwalk.spectral import decompose, eigenvalue_support

from conftest import NAMED, gid, random_graphs


def classify(g, a, kind=Kind.ADJACENCY):
    dec = decompose(build(g, kind))
    supp = eigenvalue_support(dec, a)
    return classify_support(dec, supp, dec.charpoly), dec, supp


def dense_modulus(g, kind, a, t):
    m = np.array(build(g, kind).entries, dtype=float)
    return abs(expm(1j * t * m)[a, a])


class TestClassify:
    def test_p3_end(self):
        cls, _, _ = classify(gr.path(3), 0)
        assert (cls.cls, cls.delta, cls.alpha, cls.betas) == (SupportClass.QUADRATIC, 2, 0, (2, 0, -2))
        assert cls.certified

    def test_c4(self):
        for a in range(4):
            cls, _, _ = classify(gr.cycle(4), a)
            assert cls.cls is SupportClass.INTEGER and cls.delta == 1

    def test_p4_mixed_alpha(self):
        cls, _, _ = classify(gr.path(4), 0)
        assert cls.cls is SupportClass.UNSTRUCTURED and not cls.certified
        assert any("alpha" in note for note in cls.notes)

    def test_star_center_and_leaf(self):
        cls, _, _ = classify(gr.star(3), 0)
        assert (cls.cls, cls.delta, cls.betas) == (SupportClass.QUADRATIC, 3, (2, -2))
        # a leaf also sees 0; it sits on the alpha = 0 lattice with beta = 0
        cls, _, _ = classify(gr.star(3), 1)
        assert (cls.cls, cls.delta, cls.betas) == (SupportClass.QUADRATIC, 3, (2, 0, -2))

    def test_c5_is_unstructured(self):
        # eigenvalues 2 and (-1 ± sqrt5)/2: the integer 2 is off the alpha = -1 lattice
        cls, _, _ = classify(gr.cycle(5), 0)
        assert cls.cls is SupportClass.UNSTRUCTURED

    def test_laplacian_p4_zero_off_lattice(self):
        cls, _, _ = classify(gr.path(4), 0, Kind.LAPLACIAN)
        assert cls.cls is SupportClass.UNSTRUCTURED

    def test_float_filter_failure_is_audited(self):
        # a charpoly that does not match the spectrum makes exact division fail
        from qwalk.spectral import CharPoly
        dec = decompose(build(gr.path(3), Kind.ADJACENCY))
        supp = eigenvalue_support(dec, 0)
        cls = classify_support(dec, supp, CharPoly((5, 0, 0, 1)))
        assert cls.cls is SupportClass.UNSTRUCTURED
        assert any("does not divide" in note for note in cls.notes)

    @pytest.mark.parametrize("d,f,core", [(8, 2, 2), (12, 2, 3), (5, 1, 5), (72, 6, 2), (1, 1, 1)])
    def test_squarefree(self, d, f, core):
        assert squarefree_decomposition(d) == (f, core)


class TestPeriod:
    def test_gcd_rational(self):
        cls = SupportClassification(SupportClass.QUADRATIC, 5, 1, (3, 1, -1), True)
        assert period_gcd(cls) == Fraction(1)
        cls = SupportClassification(SupportClass.INTEGER, 1, 0, (6, 2, -2, -6), True)
        assert period_gcd(cls) == Fraction(2)
        cls = SupportClassification(SupportClass.INTEGER, 1, 0, (4,), True)
        assert period_gcd(cls) == Fraction(1)

    def test_p2(self):
        cert = is_periodic(build(gr.path(2), Kind.ADJACENCY), 0)
        assert cert.periodic and cert.g == 2
        assert cert.tau_min == pytest.approx(math.pi, abs=1e-12)
        # exp(itA) = cos t I + i sin t X, so |U_00(pi)| = |cos pi| = 1
        assert abs(math.cos(cert.tau_min)) == pytest.approx(cert.verified_modulus, abs=1e-12)

    def test_p3_end(self):
        cert = is_periodic(build(gr.path(3), Kind.ADJACENCY), 0)
        assert cert.g == 1
        assert cert.tau_min == pytest.approx(math.pi * math.sqrt(2), abs=1e-12)
        assert cert.tau_min == pytest.approx(4.44288294, abs=1e-8)
        # spectral sum with weights 1/4, 1/2, 1/4
        t = math.pi * math.sqrt(2)
        u00 = 0.25 * np.exp(1j * math.sqrt(2) * t) + 0.5 + 0.25 * np.exp(-1j * math.sqrt(2) * t)
        assert abs(u00) == pytest.approx(1, abs=1e-12)

    def test_star_center(self):
        cert = is_periodic(build(gr.star(3), Kind.ADJACENCY), 0)
        assert (cert.classification.delta, cert.g) == (3, 2)
        assert cert.tau_min == pytest.approx(math.pi / math.sqrt(3), abs=1e-12)
        assert cert.tau_min == pytest.approx(1.81379936, abs=1e-8)
        # two-level dynamics: U_00(t) = cos(sqrt3 t)
        assert abs(math.cos(math.sqrt(3) * cert.tau_min)) == pytest.approx(1, abs=1e-12)

    def test_laplacian_p2(self):
        cert = is_periodic(build(gr.path(2), Kind.LAPLACIAN), 0)
        assert cert.eigenvalues == pytest.approx((2, 0), abs=1e-12)
        assert cert.g == 2 and cert.tau_min == pytest.approx(math.pi, abs=1e-12)

    def test_p4_not_periodic(self):
        res = is_periodic(build(gr.path(4), Kind.ADJACENCY), 0)
        assert not res.periodic and res.classification.cls is SupportClass.UNSTRUCTURED

    def test_hypercube(self):
        h = build(gr.hypercube(3), Kind.ADJACENCY)
        for a in range(8):
            cert = is_periodic(h, a)
            assert cert.eigenvalues == pytest.approx((3, 1, -1, -3), abs=1e-9)
            assert cert.g == 2 and cert.tau_min == pytest.approx(math.pi, abs=1e-12)

    def test_k1_degenerate(self):
        cert = is_periodic(build(gr.complete(1), Kind.ADJACENCY), 0)
        assert cert.periodic and cert.degenerate and cert.tau_min == pytest.approx(2 * math.pi)

    def test_verification_failure_returns_not_periodic(self):
        # a wrong lattice for P3: claim integer spectrum with betas (2, 0, -2)
        dec = decompose(build(gr.path(3), Kind.ADJACENCY))
        supp = eigenvalue_support(dec, 0)
        fake = SupportClassification(SupportClass.INTEGER, 1, 0, (2, 0, -2), True)
        res = minimal_period(fake, dec, supp)
        assert not res.periodic and res.measured_modulus < 1 - 1e-6

    def test_unstructured_short_circuits(self):
        dec = decompose(build(gr.path(4), Kind.ADJACENCY))
        supp = eigenvalue_support(dec, 0)
        res = minimal_period(SupportClassification(SupportClass.UNSTRUCTURED), dec, supp)
        assert not res.periodic and res.measured_modulus is None

    def test_laplacian_corollary_guard(self, monkeypatch):
        import qwalk.periodicity as per
        quad = SupportClassification(SupportClass.QUADRATIC, 2, 0, (2, -2), True)
        monkeypatch.setattr(per, "classify_support", lambda *a, **k: quad)
        with pytest.raises(CorollaryViolation):
            per.is_periodic(build(gr.path(3), Kind.LAPLACIAN), 0)

    def test_json(self):
        doc = is_periodic(build(gr.path(3), Kind.ADJACENCY), 0).to_dict()
        assert set(doc) == {"vertex", "class", "delta", "alpha", "betas", "g", "tau_min",
                            "verified_modulus", "support_norms"}
        assert doc["betas"] == [2, 0, -2] and doc["g"] == 1


CERT_GRAPHS = list(NAMED.values()) + random_graphs(40, 9, seed=3)


@pytest.mark.parametrize("g", CERT_GRAPHS, ids=gid)
@pytest.mark.parametrize("kind", [Kind.ADJACENCY, Kind.LAPLACIAN, Kind.SIGNLESS_LAPLACIAN])
def test_certificate_soundness(g, kind):
    h = build(g, kind)
    dec = decompose(h)
    for a in range(g.n):
        res = is_periodic(h, a, dec=dec)
        if not res.periodic:
            continue
        assert res.tau_min <= 2 * math.pi + 1e-12
        assert dense_modulus(g, kind, a, res.tau_min) > 1 - 1e-6
        vals = res.eigenvalues
        for i, x in enumerate(vals):
            for y in vals[i + 1:]:
                assert abs(x - y) >= 2 * math.pi / res.tau_min - 1e-9
        if res.degenerate:
            continue
        # grid spot-check of minimality: no return strictly inside (0, tau)
        grid = np.linspace(0, res.tau_min, 258)[1:-1]
        mods = np.abs(transition_entries(dec, a, a, grid))
        assert np.all(mods < 1 - 1e-6)
        if kind is Kind.LAPLACIAN:
            assert res.classification.cls is SupportClass.INTEGER
