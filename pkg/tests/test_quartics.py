import numpy as np
import pytest

from thetacoble import quartics
from thetacoble.sampling import random_tau, random_z, stream
from thetacoble.theta import PhasePoint

RNG = stream(13, "test_quartics")
TAU3 = random_tau(RNG, 3)
TAU2 = random_tau(RNG, 2)


def _naive_q(label, x):
    """Independent oracle: the defining sums with their 1/2, 1/4 prefactors."""
    if label == "Q000":
        return sum(x[e] ** 4 for e in range(8))
    a = int(label.replace("'", "")[1:], 2)
    if label.startswith("Q'"):
        perp = [mu for mu in range(8) if bin(mu & a).count("1") % 2 == 0]
        return sum(np.prod([x[e ^ mu] for mu in perp]) for e in range(8)) / 4
    return sum(x[e] ** 2 * x[e ^ a] ** 2 for e in range(8)) / 2


class TestQuarticBasis:
    def test_labels(self):
        labels = quartics.quartic_labels()
        assert len(labels) == 15
        assert labels[0] == "Q000"
        assert labels.count("Q111") == 1 and labels.count("Q'111") == 1

    def test_monomial_counts(self):
        assert len(quartics.quartic_monomials("Q000")) == 8
        for a in ("001", "010", "011", "100", "101", "110", "111"):
            assert len(quartics.quartic_monomials(f"Q{a}")) == 4
            assert len(quartics.quartic_monomials(f"Q'{a}")) == 2

    def test_eval_matches_naive_oracle(self):
        x = RNG.standard_normal(8) + 1j * RNG.standard_normal(8)
        for label in quartics.quartic_labels():
            assert quartics.q_basis_eval(label, x) == pytest.approx(
                _naive_q(label, x), rel=1e-12
            )

    def test_bad_label(self):
        with pytest.raises(ValueError):
            quartics.quartic_monomials("Q1000")


class TestCobleTable:
    def test_monomial_count_134(self):
        assert quartics.coble_monomial_count() == 134

    def test_export_records(self):
        records = quartics.export_coble_formula()
        assert len(records) == 15
        by_label = {r["quartic_label"]: r["integer_combination"] for r in records}
        assert by_label["Q000"] == {"1": 1}
        assert by_label["Q111"] == {"1": -2, "10": 4}
        assert by_label["Q'111"] == {"1": 8, "4": 8, "7": 8, "9": 8, "15": 16}

    def test_coefficients_linear_in_s(self):
        s = np.arange(1.0, 16.0)
        a = quartics.coble_coefficients(s)
        assert a["Q000"] == s[0]
        assert a["Q100"] == -2 * s[0] - 4 * s[1]
        assert a["Q'001"] == 8 * (s[0] + s[1] + s[2] + s[3]) + 16 * s[4]


class TestCobleEval:
    def test_vanishing_on_theta_locus(self):
        z = random_z(RNG, 3)
        value, scale = quartics.coble_eval(TAU3, z)
        assert abs(value) / scale < 1e-10

    def test_gradient_vanishing(self):
        z = random_z(RNG, 3)
        values, scales = quartics.coble_gradient(TAU3, z)
        assert len(values) == 8
        assert max(abs(v) / s for v, s in zip(values, scales)) < 1e-10

    def test_gradient_finite_difference_oracle(self):
        from thetacoble.modular import s_vector

        a = quartics.coble_coefficients(s_vector(TAU3))
        x = RNG.standard_normal(8) + 1j * RNG.standard_normal(8)

        def full(xv):
            return sum(a[l] * quartics.q_basis_eval(l, xv) for l in quartics.quartic_labels())

        h = 1e-6
        # compare analytic gradient monomials at an arbitrary x (not on the locus)
        for var in range(3):
            mons = []
            for label in quartics.quartic_labels():
                m = quartics._gradient_monomials(label, var)
                if m:
                    mons.append(a[label] * quartics._eval_monomials(m, x))
            xp = x.copy(); xp[var] += h
            xm = x.copy(); xm[var] -= h
            fd = (full(xp) - full(xm)) / (2 * h)
            assert abs(sum(mons) - fd) < 1e-4 * max(1.0, abs(fd))

    def test_genus_mismatch(self):
        with pytest.raises(ValueError):
            quartics.coble_eval(TAU2, PhasePoint.zero(2))


class TestKummer2:
    def test_vanishing(self):
        z = random_z(RNG, 2)
        value, scale = quartics.kummer2_eval(TAU2, z)
        assert abs(value) / scale < 1e-12

    def test_nonvanishing_off_locus(self):
        # perturbing one second-order coordinate must leave the surface
        x = quartics.theta2_vector(TAU2, random_z(RNG, 2))
        from thetacoble.modular import s_vector

        s = s_vector(TAU2)
        x = x.copy()
        x[0] *= 1.1
        terms = [s[0] * (x**4).sum()]
        for s_index, pairs in quartics.KUMMER2_PAIR_TERMS:
            quad = sum(x[a] ** 2 * x[b] ** 2 for a, b in pairs)
            terms.append(-2 * (s[0] + 2 * s[s_index - 1]) * quad)
        terms.append(8 * (s[0] + s[1] + s[2] + s[3] + 2 * s[4]) * x.prod())
        assert abs(sum(terms)) / max(abs(t) for t in terms) > 1e-4


class TestModularity:
    def test_translation_zero_exact(self):
        z = random_z(RNG, 3)
        assert quartics.jacobi_form_residual(("S", np.zeros((3, 3))), TAU3, z) == 0.0

    def test_translation_generator(self):
        z = random_z(RNG, 3)
        s = np.array([[1, 1, 0], [1, 0, 0], [0, 0, 1]])
        assert quartics.jacobi_form_residual(("S", s), TAU3, z) < 1e-9

    def test_inversion_generator(self):
        z = random_z(RNG, 3)
        assert quartics.jacobi_form_residual(("J",), TAU3, z) < 1e-9

    def test_rejects_non_symmetric_translation(self):
        z = random_z(RNG, 3)
        with pytest.raises(ValueError):
            quartics.jacobi_form_residual(("S", np.triu(np.ones((3, 3)))), TAU3, z)

    def test_rejects_unknown_generator(self):
        with pytest.raises(ValueError):
            quartics.jacobi_form_residual(("X",), TAU3, random_z(RNG, 3))
