# -*- coding: utf-8 -*-
#
import random
import unittest

import numpy as np
import pytest
import sympy as sp

from jetforms import settings
from jetforms.forms.form import (DiffForm, contact, dx, omega0,
        scalar_form)
from jetforms.forms.vector import VectorFieldSpec
from jetforms.geomver.checks import (VerificationReport, eval_form,
        finite_difference_check, first_variation_check,
        numeric_exterior_derivative, numeric_identity_check,
        numeric_zero_check, random_vectors, sample_point,
        section_pullback_check)
from jetforms.geomver.exceptions import MissingAssignmentError
from jetforms.geomver.hilbert import (hilbert_numeric_suite, hilbert_problem,
        reduced_gradient_closed_form)
from jetforms.geomver.points import (METRIC_ATTEMPTS, JetPoint, SectionSpec,
        random_metric, random_rational)
from jetforms.jetcore.expr import ScalarExpr
from jetforms.varcalc.lepage import canonical_lepage, principal_lepage

import base_classes

class TestJetPoint(unittest.TestCase, base_classes.JetTestData):
    def test_values_by_name(self):
        point = JetPoint(self.mechanics, {'t': 0, 'q': 1, 'q__0': 3, 'k': 2},
                order=1)
        assert point.value(self.q_t) == 3
        assert point.value(self.k) == 2
        assert point.exact
        assert point.evaluate(self.q_t ** 2 + self.k) == 11
        assert point.coordinates() == [self.t, self.q, self.q_t]

    def test_float_values(self):
        point = JetPoint(self.mechanics, {'q': 0.5})
        assert not point.exact
        assert isinstance(point.evaluate(self.q ** 2), float)

    def test_missing(self):
        with pytest.raises(MissingAssignmentError) as error:
            JetPoint(self.mechanics, {'p': 1})
        assert error.value.coordinate == 'p'
        point = JetPoint(self.mechanics, {'t': 0})
        with pytest.raises(MissingAssignmentError) as error:
            point.evaluate(self.q + self.t)
        assert error.value.coordinate == 'q'

    def test_random(self):
        rng = np.random.default_rng(settings.DEFAULT_SEED)
        point = JetPoint.random(self.plane, 2, rng)
        assert point.exact
        for symbol in self.plane.coordinates(2) + self.plane.param_symbols:
            assert point.value(symbol).is_Rational
        value = random_rational(rng)
        assert abs(value) <= 9

    def test_metric_point(self):
        '''The sampled inverse is the inverse of the sampled metric'''
        chart, inverse, volume = base_classes.metric_chart(2)
        point = JetPoint.random(chart, 1, np.random.default_rng(3))
        g = lambda p, q: point.value(chart.fiber_symbol('g_%s_%s' %
            tuple(sorted((p, q)))))
        ginv = lambda p, q: point.value(inverse.atom(p, q))
        for a in range(2):
            for b in range(2):
                value = sum(ginv(a, c) * g(c, b) for c in range(2))
                assert value == pytest.approx(float(a == b))
        determinant = g(0, 0) * g(1, 1) - g(0, 1) ** 2
        assert point.value(volume.symbol) == pytest.approx(
                abs(determinant) ** 0.5)
        assert abs(determinant) >= settings.METRIC_DET_THRESHOLD

    def test_random_metric(self):
        chart, inverse, _volume = base_classes.metric_chart(3)
        rng = np.random.default_rng(7)
        for _trial in range(5):
            values = random_metric(chart, inverse, rng)
            assert len(values) == 6
            matrix = inverse.metric_matrix(chart, values)
            assert abs(np.linalg.det(matrix)) >= \
                    settings.METRIC_DET_THRESHOLD
            assert np.all(np.abs(matrix) <= settings.METRIC_ENTRY_BOUND)

class TestSectionSpec(unittest.TestCase, base_classes.JetTestData):
    def test_jet_point(self):
        section = SectionSpec(self.mechanics, {'q': self.t ** 3 - self.t},
                {'k': 2})
        point = section.jet_point([2], 2)
        assert point.value(self.q) == 6
        assert point.value(self.q_t) == 11
        assert point.value(self.q_tt) == 12
        assert point.value(self.k) == 2

    def test_tangent_vectors(self):
        section = SectionSpec(self.plane, {'u': self.t * self.x})
        vectors = section.tangent_vectors([1, 2], 0)
        # coordinates t, x, u
        assert vectors == [[1, 0, 2], [0, 1, 1]]

    def test_invalid_component(self):
        with pytest.raises(ValueError):
            SectionSpec(self.mechanics, {'q': self.q_t})

class TestEvaluation(unittest.TestCase, base_classes.JetTestData):
    def test_volume(self):
        point = JetPoint(self.plane, {'t': 0, 'x': 0, 'u': 0})
        form = omega0(self.plane)
        assert eval_form(form, point, [[1, 0, 0], [0, 1, 0]]) == 1
        assert eval_form(form, point, [[0, 1, 0], [1, 0, 0]]) == -1
        with pytest.raises(ValueError):
            eval_form(form, point, [[1, 0, 0]])
        with pytest.raises(ValueError):
            eval_form(form, point, [[1, 0], [0, 1]])

    def test_contact(self):
        '''w = dq - q_t dt'''
        point = JetPoint(self.mechanics, {'t': 0, 'q': 1, 'q__0': 3},
                order=1)
        form = contact(self.mechanics, 'q')
        assert eval_form(form, point, [[1, 5, 0]]) == 2

    def test_random_vectors(self):
        rng = np.random.default_rng(1)
        vectors = random_vectors(self.mechanics, 1, 2, rng)
        assert len(vectors) == 2
        assert all(len(vector) == 3 for vector in vectors)
        vectors = random_vectors(self.mechanics, 1, 1, rng, exact=False)
        assert all(isinstance(value, float) for value in vectors[0])

class TestSectionChecks(unittest.TestCase, base_classes.JetTestData):
    def test_pullback(self):
        '''Lepage equivalents pull back to the Lagrangian along sections'''
        oscillator = self.oscillator()
        section = SectionSpec(self.mechanics, {'q': self.t ** 3 - self.t},
                {'k': 2})
        points = [[0], [sp.Rational(1, 2)], [-2]]
        for theta in (principal_lepage(oscillator),
                canonical_lepage(oscillator)):
            assert section_pullback_check(theta, oscillator, section,
                    points) == 0
        # a contact term is invisible along sections, the Lagrangian is not
        wrong = oscillator.form() + oscillator.form()
        assert section_pullback_check(wrong, oscillator, section, points) != 0

    def test_pullback_plane(self):
        wave = self.wave()
        section = SectionSpec(self.plane, {'u': self.t ** 2 * self.x +
            self.x}, {'m2': 3})
        assert section_pullback_check(principal_lepage(wave), wave, section,
                [[1, 2], [sp.Rational(-1, 3), 0]]) == 0

    def test_finite_difference(self):
        section = SectionSpec(self.mechanics, {'q': self.t ** 3 - self.t})
        f = ScalarExpr(self.mechanics, self.q ** 2 * self.t)
        residual = finite_difference_check(f, section, 0,
                [sp.Rational(1, 2)])
        assert residual < settings.FD_TOLERANCE
        assert residual > 0

    def test_first_variation(self):
        oscillator = self.oscillator()
        section = SectionSpec(self.mechanics, {'q': self.t ** 2 + 1},
                {'k': 2})
        residual = first_variation_check(principal_lepage(oscillator),
                oscillator, VectorFieldSpec(self.mechanics, [1]), section,
                [sp.Rational(1, 2)])
        assert residual < 1e-4

class TestNumericZero(unittest.TestCase, base_classes.JetTestData):
    def test_zero_form(self):
        report = numeric_zero_check(DiffForm.zero(self.plane, 1, 2),
                trials=3)
        assert report.passed
        assert report.max_residual == 0
        assert report.trials == 3

    def test_nonzero_form(self):
        report = numeric_zero_check(omega0(self.plane), trials=10, seed=5)
        assert not report.passed
        again = numeric_zero_check(omega0(self.plane), trials=10, seed=5)
        assert report.as_dict() == again.as_dict()

    def test_opaque_identity(self):
        '''ginv_0a g_a0 = 1 holds at float points'''
        chart, inverse, _volume = base_classes.metric_chart(2)
        g = lambda name: chart.fiber_symbol(name)
        form = scalar_form(chart, inverse.atom(0, 0) * g('g_0_0') +
                inverse.atom(0, 1) * g('g_0_1') - 1)
        report = numeric_zero_check(form, trials=5, seed=2)
        assert report.passed, report.failures

    def test_report(self):
        report = VerificationReport('suite', 0, 2)
        report.record(1e-12, 1e-9, 'small')
        assert report.passed
        report.record(-0.5, 1e-9, 'large')
        assert not report.passed
        assert report.max_residual == 0.5
        assert report.failures[0].startswith('large')
        assert sorted(report.as_dict()) == ['failures', 'max_residual',
                'resampled', 'seed', 'suite', 'trials']

    def test_resampling(self):
        '''Degenerate metric samples are drawn again and counted, never
        skipped'''
        chart, inverse, _volume = base_classes.metric_chart(2)
        g = lambda name: chart.fiber_symbol(name)
        form = scalar_form(chart, inverse.atom(0, 0) * g('g_0_0') +
                inverse.atom(0, 1) * g('g_0_1') - 1)
        with pytest.MonkeyPatch.context() as patch:
            patch.setattr(settings, 'METRIC_DET_THRESHOLD', 1.5)
            report = numeric_zero_check(form, trials=10, seed=4)
        assert report.passed, report.failures
        assert report.trials == 10
        assert report.resampled > 0
        assert report.as_dict()['resampled'] == report.resampled

    def test_sampling_exhausted(self):
        chart = base_classes.metric_chart(2)[0]
        report = VerificationReport('sample', 0, 0)
        with pytest.MonkeyPatch.context() as patch:
            patch.setattr(settings, 'METRIC_DET_THRESHOLD', 100)
            assert sample_point(chart, 0, np.random.default_rng(0),
                    report) is None
        assert report.resampled == METRIC_ATTEMPTS * METRIC_ATTEMPTS
        assert not report.passed

class TestNumericDerivative(unittest.TestCase, base_classes.JetTestData):
    def setUp(self):
        self.rng = np.random.default_rng(settings.DEFAULT_SEED)

    def test_contact_form(self):
        '''d w = dt ^ dq_t, read off from directional derivatives'''
        chart = self.mechanics
        point = JetPoint(chart, {'t': 0, 'q': 1, 'q__0': 3, 'q__0_0': 2,
            'k': 1}, order=2)
        # coordinates t, q, q_t and q_tt
        vectors = [[1, 0, 2, 0], [3, 1, 5, 7]]
        w = contact(chart, 'q')
        value = numeric_exterior_derivative(w, point,
                [vector[:3] for vector in vectors])
        assert value == 1 * 5 - 3 * 2
        assert value == eval_form(w.exterior_derivative(), point, vectors)
        with pytest.raises(ValueError):
            numeric_exterior_derivative(w, point, vectors[:1])

    def test_agrees_with_symbolic(self):
        chart = self.plane
        rho = contact(chart, 'u', (1,)) * (self.u * self.u_x) + \
                dx(chart, 0) * self.u_t ** 2 * self.m2
        report = numeric_identity_check([(1, rho.exterior_derivative(),
            False), (-1, rho, True)], trials=5, seed=3)
        assert report.passed, report.failures
        assert report.trials == 5
        wrong = numeric_identity_check([(2, rho.exterior_derivative(),
            False), (-1, rho, True)], trials=5, seed=3)
        assert not wrong.passed

    def test_float_points(self):
        '''Central differences at float points on well conditioned metrics,
        the opaque atoms recomputed at every shifted point'''
        chart, inverse, volume = base_classes.metric_chart(2)
        rho = scalar_form(chart, volume.symbol * inverse.atom(0, 1),
                order=1)
        with pytest.MonkeyPatch.context() as patch:
            patch.setattr(settings, 'METRIC_DET_THRESHOLD', 0.25)
            report = numeric_identity_check([(1, rho.exterior_derivative(),
                False), (-1, rho, True)], trials=5, seed=1)
        assert report.passed, report.failures
        assert report.max_residual < settings.FD_TOLERANCE
        assert report.trials == 5

    def test_degrees_must_agree(self):
        chart = self.plane
        with pytest.raises(ValueError):
            numeric_identity_check([(1, omega0(chart), False),
                (1, omega0(chart), True)])

class TestNumericProperties(unittest.TestCase):
    '''Numeric checks agree with the symbolic calculus on seeded random
    forms and sections'''
    def setUp(self):
        self.rng = random.Random(settings.DEFAULT_SEED)
        self.numbers = np.random.default_rng(settings.DEFAULT_SEED)

    def random_form(self, chart, max_order=2):
        return base_classes.random_form(chart, self.rng,
                self.rng.randint(0, chart.n), self.rng.randint(0, max_order))

    def test_pullback_of_horizontal_part(self):
        '''A section pulls rho and h rho back to the same form'''
        for _trial in range(20):
            chart = base_classes.random_chart(self.rng)
            rho = self.random_form(chart)
            section = SectionSpec.random(chart, 3, self.numbers)
            base_point = [random_rational(self.numbers)
                    for _index in range(chart.n)]
            directions = sorted(self.rng.sample(range(chart.n), rho.degree))
            horizontal = rho.horizontal()
            point = section.jet_point(base_point, horizontal.order)
            values = []
            for form in (rho, horizontal):
                tangents = section.tangent_vectors(base_point, form.order)
                values.append(eval_form(form, point,
                    [tangents[index] for index in directions]))
            assert values[0] == values[1], rho

    def test_finite_difference_convergence(self):
        '''Halving the step divides the residual by about four or more'''
        for _trial in range(20):
            chart = base_classes.random_chart(self.rng, max_base=2)
            f = ScalarExpr(chart, base_classes.random_polynomial(chart,
                self.rng, 1, degree=3))
            section = SectionSpec.random(chart, 3, self.numbers)
            x0 = [random_rational(self.numbers) for _index in range(chart.n)]
            index = self.rng.randrange(chart.n)
            coarse = finite_difference_check(f, section, index, x0, h=1e-3)
            fine = finite_difference_check(f, section, index, x0, h=5e-4)
            if coarse == 0:
                assert fine == 0
            else:
                assert fine <= coarse / 3.5, (coarse, fine)

    def test_eval_alternating(self):
        for _trial in range(50):
            chart = base_classes.random_chart(self.rng, max_base=2)
            order = self.rng.randint(0, 2)
            rho = base_classes.random_form(chart, self.rng,
                    self.rng.randint(2, 3), order)
            point = JetPoint.random(chart, order, self.numbers)
            vectors = random_vectors(chart, order, rho.degree, self.numbers)
            swapped = [vectors[1], vectors[0]] + vectors[2:]
            assert eval_form(rho, point, swapped) == \
                    -eval_form(rho, point, vectors)

    @pytest.mark.slow
    def test_symbolic_and_numeric_verdicts(self):
        '''d rho against its numeric derivative, and the zero verdicts of
        rho and d d rho, each at ten points'''
        for trial in range(20):
            chart = base_classes.random_chart(self.rng, max_base=2)
            rho = self.random_form(chart)
            d_rho = rho.exterior_derivative()
            report = numeric_identity_check([(1, d_rho, False),
                (-1, rho, True)], trials=10, seed=trial)
            assert report.passed, (rho, report.failures)
            assert report.trials == 10
            for form in (rho, d_rho.exterior_derivative()):
                report = numeric_zero_check(form, trials=10, seed=trial)
                assert report.passed == form.is_zero(), form

class TestHilbert(object):
    def test_closed_form_flat(self):
        '''Constant metrics have zero Christoffel symbols'''
        gradient = reduced_gradient_closed_form(3, np.diag([1.0, -1.0, 2.0]),
                np.zeros((3, 3, 3)))
        assert len(gradient) == 18
        assert all(value == 0 for value in gradient.values())

    def test_problem(self):
        problem = hilbert_problem(2)
        assert problem.lagrangian.order == 2
        assert problem.lagrangian_prime.order == 1
        assert problem.alpha.degree == 1
        assert problem.lagrangian.has_atoms()

    def test_suite(self):
        report = hilbert_numeric_suite(seed=0, trials=3, n=2)
        assert report.passed, report.failures
        assert report.suite == 'hilbert'
        assert report.trials == 3
        # the symbolic setup is shared between runs
        again = hilbert_numeric_suite(seed=0, trials=3, n=2)
        assert again.as_dict() == report.as_dict()

    @pytest.mark.slow
    def test_suite_four_dimensions(self):
        report = hilbert_numeric_suite(seed=settings.DEFAULT_SEED, trials=50,
                n=4)
        assert report.passed, report.failures
        assert report.trials == 50
