# -*- coding: utf-8 -*-
#
import random
import unittest

import pytest
import sympy as sp

from jetforms import settings
from jetforms.forms.basis import (contact_basis, dx_basis, parse_label,
        sort_monomial, top_basis)
from jetforms.forms.exceptions import FormError, ProjectabilityError
from jetforms.forms.form import (DiffForm, contact, dx, dy, omega, omega0,
        scalar_form, wedge)
from jetforms.forms.vector import (CoordinateVector, VectorFieldSpec,
        interior_product, lie_derivative, prolong_vector_field)
from jetforms.jetcore.chart import ChartSpec
from jetforms.varcalc.homotopy import homotopy_I, homotopy_residual

import base_classes

class TestBasis(unittest.TestCase):
    def test_labels(self):
        assert dx_basis(1).label() == 'dx[1]'
        assert contact_basis('u', (1, 0)).label() == 'w[u;0,1]'
        assert top_basis('u').label() == 'dy[u;]'

    def test_parse_label(self):
        assert parse_label('w[u;0,1]', 3) == contact_basis('u', (0, 1))
        assert parse_label('dx[2]', 0) == dx_basis(2)
        assert parse_label('dy[u;0]', 1) == top_basis('u', (0,))
        for label in ('dy[u;0]', 'w[u]', 'dz[0]', 'dx[a]', 'w[;0]'):
            with pytest.raises(FormError):
                parse_label(label, 2)

    def test_sort_monomial(self):
        '''Sorting counts transpositions; a repeated factor kills the term'''
        w = contact_basis('u')
        assert sort_monomial((w, dx_basis(0))) == (-1, (dx_basis(0), w))
        assert sort_monomial((dx_basis(1), w, dx_basis(0))) == \
                (1, (dx_basis(0), dx_basis(1), w))
        assert sort_monomial((w, w))[0] == 0

class TestDiffForm(unittest.TestCase, base_classes.JetTestData):
    def setUp(self):
        self.chart = self.plane
        self.x = self.chart.base_symbol(1)

    def test_volume_forms(self):
        chart = self.chart
        assert omega0(chart).terms == {(dx_basis(0), dx_basis(1)): 1}
        # w_i = i_{d/dx^i} w_0
        assert omega(chart, (0,)) == dx(chart, 1)
        assert omega(chart, (1,)) == -dx(chart, 0)
        assert omega(chart, (0, 1)) == scalar_form(chart, 1, order=0)
        assert omega(chart, (1, 1)).is_zero()
        assert omega(chart, (1,)) == omega0(chart).interior(
                CoordinateVector(1))

    def test_wedge(self):
        chart = self.chart
        assert wedge(dx(chart, 0), dx(chart, 1)) == omega0(chart)
        assert wedge(dx(chart, 1), dx(chart, 0)) == -omega0(chart)
        assert wedge(dx(chart, 0), dx(chart, 0)).is_zero()

    def test_invalid_monomials(self):
        chart = self.chart
        with pytest.raises(FormError):
            DiffForm(chart, 0, 2, {(dx_basis(1), dx_basis(0)): 1})
        with pytest.raises(FormError):
            DiffForm(chart, 0, 1, {(contact_basis('u'),): 1})
        with pytest.raises(FormError):
            DiffForm(chart, 1, 1, {(dx_basis(2),): 1})
        with pytest.raises(FormError):
            DiffForm(chart, 1, 1, {(contact_basis('v'),): 1})
        with pytest.raises(FormError):
            DiffForm(chart, 1, 2, {(dx_basis(0),): 1})

    def test_from_terms(self):
        chart = self.chart
        form = DiffForm.from_terms(chart, 0, 2, [(1, (dx_basis(1),
            dx_basis(0))), (self.u, (dx_basis(0), dx_basis(1)))])
        assert form == omega0(chart) * (self.u - 1)
        assert form.coefficient((dx_basis(1), dx_basis(0))) == 1 - self.u

    def test_incompatible_sums(self):
        with pytest.raises(FormError):
            dx(self.chart, 0) + omega0(self.chart)
        with pytest.raises(FormError):
            dx(self.chart, 0) + dx(ChartSpec(['t', 'x'], ['v']), 0)

    def test_exterior_derivative(self):
        '''df = d_i f dx^i + df/dy w^y; dy = w + y_j dx^j'''
        chart = self.chart
        du = scalar_form(chart, self.u).exterior_derivative()
        assert du == dy(chart, 'u')
        assert du == contact(chart, 'u') + dx(chart, 0) * self.u_t + \
                dx(chart, 1) * self.u_x

    def test_d_squared(self):
        chart = self.chart
        f = scalar_form(chart, self.x * self.u ** 2 * self.u_t)
        assert f.exterior_derivative().exterior_derivative().is_zero()
        rho = contact(chart, 'u', (1,)) * (self.u * self.u_x) + \
                dx(chart, 0) * self.u_t ** 2
        assert rho.exterior_derivative().exterior_derivative().is_zero()

    def test_top_order_differentials(self):
        '''d treats dy at the top order as closed and lifts it afterwards'''
        line = ChartSpec(['x'], ['y'])
        y = line.fiber_symbol('y')
        rho = dy(line, 'y') * y
        assert rho.exterior_derivative().is_zero()
        assert homotopy_I(rho) == scalar_form(line, y ** 2 / 2)
        assert homotopy_residual(rho).is_zero()
        chart = self.chart
        assert dy(chart, 'u', (0,)).exterior_derivative().is_zero()
        assert (dy(chart, 'u', (0,)) * self.u_x).exterior_derivative() == \
                wedge(dy(chart, 'u', (1,)), dy(chart, 'u', (0,)))

    def test_contact_split(self):
        chart = self.chart
        rho = wedge(dy(chart, 'u', (0,)), dx(chart, 1))
        horizontal, one_contact, two_contact = rho.split_contact()
        assert horizontal == omega0(chart) * chart.fiber_symbol('u', (0, 0))
        assert one_contact == wedge(contact(chart, 'u', (0,)), dx(chart, 1))
        assert two_contact.is_zero()
        assert horizontal + one_contact + two_contact == rho
        assert rho.horizontal() == horizontal
        assert rho.contact_component(1) == one_contact
        assert rho.contact_component(5).is_zero()
        assert tuple(rho.contact_degrees()) == (0, 1)

    def test_natural_order(self):
        chart = self.chart
        w = contact(chart, 'u', order=3)
        assert w.natural_order() == 1
        assert w.reduce_order(1) == w
        assert w.reduce_order(1).order == 1
        assert omega0(chart, 3).natural_order() == 0
        with pytest.raises(FormError):
            w.reduce_order(0)
        with pytest.raises(FormError):
            w.lift(2)

    def test_str(self):
        chart = self.chart
        assert str(DiffForm.zero(chart, 1, 2)) == '0'
        assert str(omega0(chart)) == '(1) dx[0] ^ dx[1]'

    def test_zero_section(self):
        chart = self.chart
        rho = omega0(chart, 1) * (self.u_t + self.x) + \
                wedge(contact(chart, 'u'), dx(chart, 1))
        assert rho.pullback_zero_section() == omega0(chart) * self.x

    def test_translate_fibers(self):
        '''Translating the fibers commutes with d and leaves contact forms
        alone'''
        chart = self.chart
        shifts = {'u': self.x ** 2}
        f = scalar_form(chart, self.u * self.u_x)
        assert f.translate_fibers(shifts) == scalar_form(chart,
                (self.u + self.x ** 2) * (self.u_x + 2 * self.x))
        assert contact(chart, 'u').translate_fibers(shifts) == \
                contact(chart, 'u')
        assert dy(chart, 'u').translate_fibers(shifts) == dy(chart, 'u') + \
                dx(chart, 1) * (2 * self.x)
        assert f.exterior_derivative().translate_fibers(shifts) == \
                f.translate_fibers(shifts).exterior_derivative()
        with pytest.raises(FormError):
            f.translate_fibers({'u': self.u})
        with pytest.raises(FormError):
            f.translate_fibers({'v': self.x})

    def test_undefined_gauge_function(self):
        chart = self.chart
        gauge = sp.Function('f')(*chart.base_symbols)
        shifted = scalar_form(chart, self.u).translate_fibers({'u': gauge})
        assert shifted.terms[()] == self.u + gauge

class TestVectorFields(unittest.TestCase, base_classes.JetTestData):
    def test_projectable(self):
        chart = self.mechanics
        with pytest.raises(ProjectabilityError):
            VectorFieldSpec(chart, [self.q])
        with pytest.raises(FormError):
            VectorFieldSpec(chart, Xi={'q': self.q_t})
        with pytest.raises(FormError):
            VectorFieldSpec(chart, Xi={'p': 1})
        assert VectorFieldSpec(chart, Xi={'q': self.q}).is_vertical()
        assert not VectorFieldSpec(chart, [1]).is_vertical()

    def test_prolongation(self):
        '''Scaling prolongs to itself; time translation has no vertical
        part'''
        chart = self.mechanics
        scaling = prolong_vector_field(VectorFieldSpec(chart,
            Xi={'q': self.q}), 2)
        assert scaling.components[('q', (0,))] == self.q_t
        assert scaling.component('q', (0, 0)) == self.q_tt
        translation = prolong_vector_field(VectorFieldSpec(chart, [1]), 2)
        assert all(value == 0 for value in translation.components.values())
        # Xi = t d/dq prolongs to Xi_t = 1
        boost = prolong_vector_field(VectorFieldSpec(chart,
            Xi={'q': self.t}), 1)
        assert boost.component('q', (0,)) == 1

    def test_interior_product(self):
        chart = self.mechanics
        scaling = VectorFieldSpec(chart, Xi={'q': self.q})
        assert interior_product(scaling, dy(chart, 'q')) == \
                scalar_form(chart, self.q)
        assert interior_product(CoordinateVector(0),
                contact(chart, 'q')) == scalar_form(chart, -self.q_t)
        with pytest.raises(FormError):
            interior_product(scaling, scalar_form(chart, self.q))

    def test_lie_derivative(self):
        chart = self.mechanics
        scaling = VectorFieldSpec(chart, Xi={'q': self.q})
        assert lie_derivative(scaling, scalar_form(chart, self.q ** 2)) == \
                scalar_form(chart, 2 * self.q ** 2)
        # Cartan's formula on a one-form: L_X dq = d(i_X dq)
        assert lie_derivative(scaling, dy(chart, 'q')) == dy(chart, 'q')

class TestFormProperties(unittest.TestCase):
    '''Identities of the exterior calculus on seeded random forms'''
    def setUp(self):
        self.rng = random.Random(settings.DEFAULT_SEED)

    def random_form(self, chart, max_order=2, degree=None):
        if degree is None:
            degree = self.rng.randint(0, chart.n)
        order = self.rng.randint(0, max_order)
        return base_classes.random_form(chart, self.rng, degree, order)

    @pytest.mark.slow
    def test_d_squared(self):
        for _trial in range(200):
            chart = base_classes.random_chart(self.rng)
            rho = self.random_form(chart, max_order=3)
            assert rho.exterior_derivative().exterior_derivative().is_zero(), \
                    rho

    def test_contact_components_sum(self):
        for _trial in range(200):
            chart = base_classes.random_chart(self.rng)
            rho = self.random_form(chart, max_order=3)
            parts = rho.split_contact()
            total = DiffForm.zero(chart, rho.order + 1, rho.degree)
            for count, part in enumerate(parts):
                for monomial in part.terms:
                    assert sum(1 for factor in monomial
                            if factor.is_fiber) == count
                total = total + part
            assert total == rho.lift(rho.order + 1)

    def test_horizontal_multiplicative(self):
        for _trial in range(50):
            chart = base_classes.random_chart(self.rng)
            rho = self.random_form(chart)
            eta = self.random_form(chart)
            assert wedge(rho, eta).horizontal() == \
                    wedge(rho.horizontal(), eta.horizontal())

    def test_interior_antiderivation(self):
        '''i(rho ^ eta) = i(rho) ^ eta + (-1)^deg(rho) rho ^ i(eta)'''
        rng = self.rng
        for _trial in range(50):
            chart = base_classes.random_chart(rng, max_base=2)
            xi = [rng.randint(-2, 2) + rng.randint(-2, 2) *
                    rng.choice(chart.base_symbols)
                    for _index in range(chart.n)]
            Xi = dict((field, base_classes.random_polynomial(chart, rng, 0))
                    for field in chart.fields)
            vector = VectorFieldSpec(chart, xi, Xi)
            order = rng.randint(0, 2)
            rho = base_classes.random_form(chart, rng, rng.randint(1, 2),
                    order)
            eta = base_classes.random_form(chart, rng, 1, order)
            sign = -1 if rho.degree % 2 else 1
            assert interior_product(vector, wedge(rho, eta)) == \
                    wedge(interior_product(vector, rho), eta) + \
                    wedge(rho, interior_product(vector, eta)) * sign
