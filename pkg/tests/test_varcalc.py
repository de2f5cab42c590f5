# -*- coding: utf-8 -*-
#
import random
import unittest

import pytest
import sympy as sp

from jetforms import settings
from jetforms.forms.exceptions import FormError
from jetforms.forms.form import (DiffForm, contact, dx, omega, omega0,
        scalar_form, wedge)
from jetforms.forms.vector import VectorFieldSpec
from jetforms.jetcore import calculus
from jetforms.jetcore.exceptions import HomotopyError
from jetforms.lagdsl.elaborate import shipped_problem
from jetforms.varcalc.conditions import verify_lepage_conditions
from jetforms.varcalc.euler import euler_lagrange, is_trivial
from jetforms.varcalc.exceptions import FirstOrderRequiredError, SplitError
from jetforms.varcalc.homotopy import (homotopy_I, homotopy_residual,
        vainberg_tonti)
from jetforms.varcalc.lagrangian import (Lagrangian, SourceForm,
        is_affine_in_top_order)
from jetforms.varcalc.lepage import (CANONICAL, KINDS, PRINCIPAL, REDUCED,
        canonical_lepage, canonical_split, first_order_nu, fundamental_lepage,
        lepage_equivalent, principal_lepage, reduced_lepage, theta_difference)
from jetforms.varcalc.noether import current_components, noether_current

import base_classes

class TestLagrangian(unittest.TestCase, base_classes.JetTestData):
    def test_order(self):
        assert self.oscillator().order == 1
        assert Lagrangian(self.mechanics, self.q, order=2).order == 2
        with pytest.raises(ValueError):
            Lagrangian(self.mechanics, self.q_tt, order=1)
        with pytest.raises(ValueError):
            Lagrangian(self.mechanics, self.q, order=-1)
        with pytest.raises(TypeError):
            Lagrangian(self.mechanics, 0.5)

    def test_form_round_trip(self):
        lagrangian = self.wave()
        assert Lagrangian.from_form(lagrangian.form()) == lagrangian
        with pytest.raises(FormError):
            Lagrangian.from_form(dx(self.plane, 0))
        with pytest.raises(FormError):
            Lagrangian.from_form(contact(self.mechanics, 'q'))

    def test_arithmetic(self):
        lagrangian = self.oscillator()
        assert (lagrangian + lagrangian).density == \
                2 * lagrangian.density
        assert (lagrangian - lagrangian).density == 0
        assert (-lagrangian).density == -lagrangian.density
        assert (lagrangian * self.t).order == 1

    def test_polynomial(self):
        assert self.oscillator().is_polynomial()
        assert not Lagrangian(self.mechanics, 1 / self.q).is_polynomial()

    def test_affine_in_top_order(self):
        assert not is_affine_in_top_order(self.oscillator())
        assert is_affine_in_top_order(Lagrangian(self.mechanics,
            self.q * self.q_tt))

    def test_source_form(self):
        source = SourceForm(self.mechanics, {'q': self.oscillator_el})
        assert SourceForm.from_form(source.form()) == source
        assert source.form().degree == 2
        with pytest.raises(FormError):
            SourceForm(self.mechanics, {'p': 1})
        with pytest.raises(FormError):
            SourceForm.from_form(omega0(self.plane) + omega0(self.plane))

class TestEulerLagrange(unittest.TestCase, base_classes.JetTestData):
    def test_oscillator(self):
        source = euler_lagrange(self.oscillator())
        assert source['q'] == self.oscillator_el
        assert source.order == 2

    def test_wave(self):
        source = euler_lagrange(self.wave())
        assert sp.expand(source['u'] - self.wave_el) == 0

    def test_second_order(self):
        '''L = q_tt^2 / 2 gives q_tttt'''
        lagrangian = Lagrangian(self.mechanics, self.q_tt ** 2 / 2)
        source = euler_lagrange(lagrangian)
        assert source['q'] == self.mechanics.fiber_symbol('q', (0,) * 4)
        assert source.order == 4

    def test_trivial(self):
        assert is_trivial(self.trivial())
        assert is_trivial(self.jacobian())
        assert not is_trivial(self.oscillator())
        assert euler_lagrange(self.jacobian()).is_zero()

class TestHomotopy(unittest.TestCase, base_classes.JetTestData):
    def test_vainberg_tonti(self):
        '''L_VT = q int_0^1 E(t q) dt'''
        lambda_vt = vainberg_tonti(euler_lagrange(self.oscillator()))
        assert lambda_vt.density == sp.expand(-self.k * self.q ** 2 / 2 -
                self.q * self.q_tt / 2)
        assert lambda_vt.order == 2
        # same Euler-Lagrange form as the Lagrangian it came from
        assert euler_lagrange(lambda_vt) == euler_lagrange(self.oscillator())

    def test_vainberg_tonti_of_zero(self):
        lambda_vt = vainberg_tonti(euler_lagrange(self.trivial()))
        assert lambda_vt.density == 0

    def test_homotopy_identity(self):
        '''rho = I d rho + d I rho + 0* rho'''
        oscillator = self.oscillator()
        theta = principal_lepage(oscillator).form
        assert homotopy_residual(oscillator.form()).is_zero()
        assert homotopy_residual(theta).is_zero()
        assert homotopy_residual(theta.exterior_derivative()).is_zero()
        wave = principal_lepage(self.wave()).form
        assert homotopy_residual(wave).is_zero()
        assert homotopy_residual(scalar_form(self.plane,
            self.u ** 2 * self.u_x + self.m2)).is_zero()

    def test_homotopy_of_functions(self):
        assert homotopy_I(scalar_form(self.mechanics, self.q)).is_zero()
        assert homotopy_I(contact(self.mechanics, 'q') * self.q_t) == \
                scalar_form(self.mechanics, self.q * self.q_t / 2)

    def test_not_polynomial(self):
        with pytest.raises(HomotopyError):
            homotopy_I(contact(self.mechanics, 'q') * (1 / self.q))

class TestLepage(unittest.TestCase, base_classes.JetTestData):
    def test_kinds(self):
        assert KINDS == ('principal', 'fundamental', 'canonical', 'reduced')
        with pytest.raises(ValueError):
            lepage_equivalent(self.oscillator(), 'cartan')
        with pytest.raises(ValueError):
            lepage_equivalent(self.oscillator(), REDUCED)

    def test_principal_first_order(self):
        '''Theta = L dt + dL/dq_t w^q'''
        oscillator = self.oscillator()
        result = principal_lepage(oscillator)
        assert result.kind == PRINCIPAL
        assert result.form.order == 1
        assert result.form == oscillator.form() + \
                contact(self.mechanics, 'q') * self.q_t
        assert result.natural_order == 1
        assert lepage_equivalent(oscillator, PRINCIPAL).form == result.form

    def test_principal_second_order(self):
        affine = principal_lepage(Lagrangian(self.mechanics,
            self.q * self.q_tt))
        assert affine.form.order == 3
        assert affine.natural_order == 1
        squared = principal_lepage(Lagrangian(self.mechanics,
            self.q_tt ** 2 / 2))
        assert squared.natural_order == 3

    def test_principal_order_zero(self):
        lagrangian = Lagrangian(self.mechanics, self.q ** 2)
        assert principal_lepage(lagrangian).form == lagrangian.form()

    def test_lepage_conditions(self):
        for lagrangian in (self.oscillator(), self.wave(), self.jacobian()):
            for kind in (PRINCIPAL, 'fundamental', CANONICAL):
                report = verify_lepage_conditions(
                        lepage_equivalent(lagrangian, kind), lagrangian)
                assert report.passed, report.first_failure()
                assert report.first_failure() is None

    def test_lepage_conditions_fail(self):
        oscillator = self.oscillator()
        report = verify_lepage_conditions(oscillator.form(), oscillator)
        assert not report.passed
        assert report.first_failure().startswith('p1 d(theta)')
        names = [name for name, _form in report.residual_forms()]
        assert names == ['horizontal', 'higher', 'source']
        theta = principal_lepage(oscillator).form
        report = verify_lepage_conditions(theta + theta, oscillator)
        assert report.first_failure().startswith('h(theta) - lambda')
        with pytest.raises(FormError):
            verify_lepage_conditions(scalar_form(self.mechanics, 1),
                    oscillator)

    def test_fundamental(self):
        '''The fundamental form of the Jacobian is du ^ dv'''
        result = fundamental_lepage(self.jacobian())
        assert result.contact_degrees == (0, 1, 2)
        assert result.form.exterior_derivative().is_zero()
        # a single field has no contact terms beyond the first
        assert fundamental_lepage(self.oscillator()).form == \
                principal_lepage(self.oscillator()).form
        with pytest.raises(FirstOrderRequiredError):
            fundamental_lepage(Lagrangian(self.mechanics, self.q_tt ** 2))

    def test_canonical_split(self):
        split = canonical_split(self.oscillator())
        assert split.holds()
        assert split.lambda_vt.density == sp.expand(-self.k * self.q ** 2 /
                2 - self.q * self.q_tt / 2)
        assert split.alpha == scalar_form(self.mechanics,
                self.q * self.q_t / 2)

    def test_canonical_closed_for_trivial(self):
        '''d Phi = 0 exactly when the Lagrangian is trivial'''
        for lagrangian in (self.trivial(), self.jacobian()):
            phi = canonical_lepage(lagrangian)
            assert phi.kind == CANONICAL
            assert phi.form.exterior_derivative().is_zero()
        phi = canonical_lepage(self.oscillator()).form
        assert not phi.exterior_derivative().is_zero()

    def test_canonical_first_order(self):
        '''For first order Lagrangians Phi = Theta + p1 d nu'''
        oscillator = self.oscillator()
        assert canonical_lepage(oscillator).form == \
                principal_lepage(oscillator).form
        assert theta_difference(oscillator).is_zero()
        correction = first_order_nu(self.wave())
        assert correction.nu.is_zero()
        assert correction.canonical.form == principal_lepage(self.wave()).form
        assert sp.expand(correction.alpha_components[0] -
                self.u * self.u_t / 2) == 0
        assert sp.expand(correction.alpha_components[1] +
                self.u * self.u_x / 2) == 0
        with pytest.raises(FirstOrderRequiredError):
            first_order_nu(Lagrangian(self.mechanics, self.q_tt ** 2))

    def test_canonical_linear(self):
        oscillator = self.oscillator()
        trivial = self.trivial()
        assert canonical_lepage(oscillator + trivial).form == \
                canonical_lepage(oscillator).form + \
                canonical_lepage(trivial).form

    def test_reduced(self):
        '''lambda = lambda' + h d alpha with alpha = t q'''
        full = self.oscillator() + self.trivial()
        prime = self.oscillator()
        alpha = scalar_form(self.mechanics, self.t * self.q)
        result = lepage_equivalent(full, REDUCED, (prime, alpha))
        assert result.kind == REDUCED
        assert result.provenance['split_checked'] is True
        assert result.provenance['split_residual'].is_zero()
        assert verify_lepage_conditions(result, full).passed
        assert result.form == principal_lepage(prime).form + \
                alpha.exterior_derivative()

    def test_reduced_below_declared_order(self):
        '''2 q_t q_tt = h d(q_t^2) has a closed reduced form on J^1'''
        chart = self.mechanics
        full = Lagrangian(chart, 2 * self.q_t * self.q_tt)
        result = reduced_lepage(full, Lagrangian(chart, 0),
                scalar_form(chart, self.q_t ** 2))
        assert result.form.order == 1
        assert result.natural_order == 1
        assert result.form.has_top_factors()
        assert result.form.exterior_derivative().is_zero()
        assert verify_lepage_conditions(result, full).passed

    def test_reduced_rejects_bad_splits(self):
        full = self.oscillator() + self.trivial()
        prime = self.oscillator()
        with pytest.raises(SplitError) as error:
            reduced_lepage(full, prime, scalar_form(self.mechanics, self.q))
        assert not error.value.residual.is_zero()
        with pytest.raises(FormError):
            reduced_lepage(full, prime, dx(self.mechanics, 0))
        with pytest.raises(ValueError):
            reduced_lepage(full, Lagrangian(self.mechanics,
                self.q * self.q_tt), scalar_form(self.mechanics, 0))

class TestVariationalProperties(unittest.TestCase):
    '''Properties of the variational constructions on seeded random
    Lagrangians and forms'''
    def setUp(self):
        self.rng = random.Random(settings.DEFAULT_SEED)

    def random_lagrangian(self, chart, order, degree=2):
        return Lagrangian(chart, base_classes.random_polynomial(chart,
            self.rng, order, degree), order=order)

    def random_splitting(self, chart, order):
        '''``(alpha, d_i a^i)`` for ``alpha = a^i w_i`` with coefficients of
        order ``order - 1``'''
        alpha = DiffForm.zero(chart, order - 1, chart.n - 1)
        parts = []
        for index in range(chart.n):
            component = base_classes.random_polynomial(chart, self.rng,
                    order - 1)
            alpha = alpha + omega(chart, (index,), order - 1) * component
            parts.append(calculus.total_derivative(chart, component, index))
        return alpha, sp.Add(*parts)

    def test_divergence_has_no_euler_lagrange(self):
        for _trial in range(50):
            chart = base_classes.random_chart(self.rng)
            density = base_classes.random_divergence(chart, self.rng,
                    self.rng.randint(0, 1))
            assert is_trivial(Lagrangian(chart, density)), density

    @pytest.mark.slow
    def test_homotopy(self):
        '''rho = I d rho + d I rho + 0* rho, I p_k = p_(k-1) I, I h = 0'''
        rng = self.rng
        for _trial in range(100):
            chart = base_classes.random_chart(rng)
            rho = base_classes.random_form(chart, rng,
                    rng.randint(0, chart.n), rng.randint(0, 2))
            assert homotopy_residual(rho).is_zero(), rho
            assert homotopy_I(rho.horizontal()).is_zero()
            if not rho.degree:
                continue
            lowered = homotopy_I(rho)
            for count in range(1, rho.degree + 1):
                assert homotopy_I(rho.contact_component(count)) == \
                        lowered.contact_component(count - 1)

    @pytest.mark.slow
    def test_canonical_closed_for_trivial(self):
        rng = self.rng
        for _trial in range(100):
            chart = base_classes.random_chart(rng)
            lagrangian = Lagrangian(chart, base_classes.random_divergence(
                chart, rng, rng.randint(0, 1), degree=3))
            assert is_trivial(lagrangian)
            phi = canonical_lepage(lagrangian).form
            assert phi.exterior_derivative().is_zero(), lagrangian

    @pytest.mark.slow
    def test_canonical_not_closed_otherwise(self):
        controls = 0
        while controls < 10:
            chart = base_classes.random_chart(self.rng, max_base=2)
            lagrangian = self.random_lagrangian(chart, 1, degree=3)
            if is_trivial(lagrangian):
                continue
            controls += 1
            phi = canonical_lepage(lagrangian)
            assert not phi.form.exterior_derivative().is_zero()
            assert verify_lepage_conditions(phi, lagrangian).passed

    @pytest.mark.slow
    def test_fundamental_closed_for_trivial(self):
        rng = self.rng
        lagrangians = [base_classes.JetTestData.jacobian()]
        while len(lagrangians) < 50:
            chart = base_classes.random_chart(rng)
            lagrangians.append(Lagrangian(chart,
                base_classes.random_divergence(chart, rng, 0, degree=3),
                order=1))
        for lagrangian in lagrangians:
            rho = fundamental_lepage(lagrangian).form
            assert rho.exterior_derivative().is_zero(), lagrangian

    @pytest.mark.slow
    def test_lepage_conditions(self):
        '''Every construction satisfies both Lepage conditions within its
        order bound'''
        rng = self.rng
        for _trial in range(100):
            chart = base_classes.random_chart(rng, max_base=2)
            order = rng.randint(1, 2)
            lagrangian = self.random_lagrangian(chart, order,
                    degree=3 if order == 1 else 2)
            results = [principal_lepage(lagrangian),
                    canonical_lepage(lagrangian)]
            if order == 1:
                results.append(fundamental_lepage(lagrangian))
            prime = self.random_lagrangian(chart, order)
            alpha, divergence = self.random_splitting(chart, order)
            full = Lagrangian(chart, prime.density + divergence, order=order)
            results.append(reduced_lepage(full, prime, alpha))
            for result in results:
                report = verify_lepage_conditions(result, result.lagrangian)
                assert report.passed, (result.kind, report.first_failure())
            assert results[0].natural_order <= 2 * order - 1
            assert results[1].natural_order <= 4 * order - 2
            if order == 1:
                split = results[1].provenance['split']
                assert euler_lagrange(split.lambda_vt) == split.euler_lagrange

    @pytest.mark.slow
    def test_canonical_linear(self):
        '''Phi is linear, and dynamically equivalent Lagrangians have the
        same d Phi'''
        for _trial in range(20):
            chart = base_classes.random_chart(self.rng, max_base=2)
            first = self.random_lagrangian(chart, 1)
            second = self.random_lagrangian(chart, 1)
            assert canonical_lepage(first * 2 + second * 3).form == \
                    canonical_lepage(first).form * 2 + \
                    canonical_lepage(second).form * 3
            _alpha, divergence = self.random_splitting(chart, 1)
            shifted = Lagrangian(chart, first.density + divergence, order=1)
            difference = canonical_lepage(shifted).form - \
                    canonical_lepage(first).form
            assert difference.exterior_derivative().is_zero()

ETA = (1, -1, -1, -1)

class TestKleinGordon(unittest.TestCase):
    '''L = eta^ij phi_i phi_j / 2 - m2 phi^2 / 2 on Minkowski space'''
    def setUp(self):
        problem = shipped_problem('kg')
        self.lagrangian = problem.lagrangian
        self.chart = chart = problem.chart
        self.phi = chart.fiber_symbol('phi')
        self.m2 = chart.param_symbol('m2')
        self.first = [chart.fiber_symbol('phi', (i,)) for i in range(4)]

    def test_vainberg_tonti(self):
        chart = self.chart
        wave = sum(ETA[i] * chart.fiber_symbol('phi', (i, i))
                for i in range(4))
        source = euler_lagrange(self.lagrangian)
        assert base_classes.expand_equal(source['phi'],
                -self.m2 * self.phi - wave)
        assert base_classes.expand_equal(vainberg_tonti(source).density,
                -(self.phi * wave + self.m2 * self.phi ** 2) / 2)

    def test_alpha(self):
        '''alpha = eta^ij phi phi_j w_i / 2, the Lagrangian vanishing on the
        zero section'''
        chart = self.chart
        alpha = DiffForm.zero(chart, 1, 3)
        for i in range(4):
            alpha = alpha + omega(chart, (i,), 1) * (ETA[i] * self.phi *
                    self.first[i] / 2)
        split = canonical_split(self.lagrangian)
        assert (split.alpha - alpha).is_zero()
        assert (split.d_alpha - alpha.exterior_derivative()).is_zero()

    def test_canonical_is_principal(self):
        correction = first_order_nu(self.lagrangian)
        assert correction.nu.is_zero()
        theta = principal_lepage(self.lagrangian)
        assert correction.canonical.form == theta.form
        assert correction.canonical.natural_order == 1
        assert theta.natural_order == 1
        expected = self.lagrangian.form()
        for i in range(4):
            expected = expected + wedge(contact(self.chart, 'phi'),
                    omega(self.chart, (i,))) * (ETA[i] * self.first[i])
        assert (theta.form - expected).is_zero()

class TestElectromagnetism(unittest.TestCase):
    '''L = F_ij F^ij with F_ij = A_j,i - A_i,j'''
    @classmethod
    def setUpClass(cls):
        problem = shipped_problem('em')
        cls.lagrangian = problem.lagrangian
        cls.chart = chart = problem.chart
        def A(k, *multi):
            return chart.fiber_symbol('A_%s' % k, multi)
        cls.A = staticmethod(A)
        cls.raised = [ETA[i] * A(i) for i in range(4)]
        # F^ij and A^i,k
        cls.F = [[ETA[i] * ETA[j] * (A(j, i) - A(i, j)) for j in range(4)]
            for i in range(4)]
        cls.dA = [[ETA[i] * ETA[k] * A(i, k) for k in range(4)]
            for i in range(4)]
        cls.canonical = canonical_lepage(cls.lagrangian)

    def eta(self, i, j):
        return ETA[i] if i == j else 0

    def test_euler_lagrange(self):
        '''E_j = -4 d_i F^ij, lambda_VT = -2 A_j d_i F^ij'''
        chart = self.chart
        source = euler_lagrange(self.lagrangian)
        vt = 0
        for j in range(4):
            divergence = sum(calculus.total_derivative(chart, self.F[i][j], i)
                    for i in range(4))
            assert base_classes.expand_equal(source['A_%s' % j],
                    -4 * divergence)
            vt += -2 * self.A(j) * divergence
        assert base_classes.expand_equal(vainberg_tonti(source).density, vt)

    def test_momenta(self):
        gradient = calculus.jet_gradient(self.chart, self.lagrangian.density)
        for i in range(4):
            for j in range(4):
                assert base_classes.expand_equal(gradient.get(self.A(j, i),
                    0), 4 * self.F[i][j])

    def test_nu(self):
        '''nu = -(A^i eta^jk - A^j eta^ik) w^k ^ w_ij / 2'''
        chart = self.chart
        expected = DiffForm.zero(chart, 1, 3)
        for i in range(4):
            for j in range(4):
                for k in range(4):
                    coefficient = self.raised[i] * self.eta(j, k) - \
                            self.raised[j] * self.eta(i, k)
                    if coefficient != 0:
                        expected = expected - wedge(contact(chart,
                            'A_%s' % k), omega(chart, (i, j), 1)) * \
                                    (coefficient / 2)
        correction = first_order_nu(self.lagrangian)
        assert (correction.nu - expected).is_zero()

    def test_canonical(self):
        '''Phi = L w_0 + (4 F^ik + A^i,k - A^j,j eta^ik) w^k ^ w_i
        + (A^i eta^jk - A^j eta^ik) w^k_j ^ w_i'''
        chart = self.chart
        divergence = sum(ETA[j] * self.A(j, j) for j in range(4))
        expected = self.lagrangian.form()
        for i in range(4):
            volume = omega(chart, (i,))
            for k in range(4):
                expected = expected + wedge(contact(chart, 'A_%s' % k),
                        volume) * (4 * self.F[i][k] + self.dA[i][k] -
                                divergence * self.eta(i, k))
                for j in range(4):
                    coefficient = self.raised[i] * self.eta(j, k) - \
                            self.raised[j] * self.eta(i, k)
                    if coefficient != 0:
                        expected = expected + wedge(contact(chart,
                            'A_%s' % k, (j,)), volume) * coefficient
        phi = self.canonical.form
        assert phi.order == 2
        assert (phi - expected).is_zero()

    def test_canonical_exterior_derivative(self):
        '''d Phi = E + 2 (2 eta^jk eta^il - eta^ij eta^kl - eta^ik eta^jl)
        w^j_l ^ w^k ^ w_i'''
        chart = self.chart
        expected = euler_lagrange(self.lagrangian).form()
        for i in range(4):
            volume = omega(chart, (i,))
            for j in range(4):
                for k in range(4):
                    for l in range(4):
                        coefficient = 2 * (2 * self.eta(j, k) *
                                self.eta(i, l) - self.eta(i, j) *
                                self.eta(k, l) - self.eta(i, k) *
                                self.eta(j, l))
                        if coefficient:
                            expected = expected + wedge(wedge(contact(chart,
                                'A_%s' % j, (l,)), contact(chart,
                                    'A_%s' % k)), volume) * coefficient
        d_phi = self.canonical.form.exterior_derivative()
        assert (d_phi - expected).is_zero()

class TestNoether(unittest.TestCase, base_classes.JetTestData):
    def test_energy(self):
        '''Time translation of the oscillator conserves the energy'''
        oscillator = self.oscillator()
        theta = principal_lepage(oscillator)
        current = noether_current(theta, VectorFieldSpec(self.mechanics, [1]))
        (component,) = current_components(current)
        energy = self.q_t ** 2 / 2 + self.k * self.q ** 2 / 2
        assert sp.expand(component + energy) == 0
        # d_t J = q_t E vanishes on solutions
        divergence = calculus.total_derivative(self.mechanics, component, 0)
        assert sp.expand(divergence - self.q_t * self.oscillator_el) == 0

    def test_divergence(self):
        '''sum_i d_i J^i = u_t E for time translation of the wave'''
        wave = self.wave()
        field = VectorFieldSpec(self.plane, [1, 0])
        components = current_components(noether_current(
            principal_lepage(wave), field))
        divergence = sp.Add(*[calculus.total_derivative(self.plane,
            component, index) for index, component in enumerate(components)])
        assert sp.expand(divergence - self.u_t * self.wave_el) == 0

    def test_invalid_vector_field(self):
        theta = principal_lepage(self.oscillator())
        with pytest.raises(TypeError):
            noether_current(theta, [1])
        with pytest.raises(FormError):
            noether_current(theta, VectorFieldSpec(self.plane, [1, 0]))
