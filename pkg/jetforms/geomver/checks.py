# -*- coding: utf-8 -*-
#
# Copyright (c) 2026 The jetforms developers
#
# jetforms is free software; you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License as published by the Free Software Foundation; either
# version 2.1 of the License, or (at your option) any later version.
#
# jetforms is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public
# License along with jetforms; if not, see <http://www.gnu.org/licenses/>
#
'''
--------------
Numeric checks
--------------

Evaluation of forms on tangent vectors and the numeric counterparts of the
symbolic identities:

* :func:`section_pullback_check` compares ``J gamma* theta`` with
  ``J gamma* lambda`` along a polynomial section,
* :func:`finite_difference_check` compares a total derivative with a
  central difference quotient,
* :func:`first_variation_check` evaluates both sides of the first
  variation formula,
* :func:`numeric_zero_check` evaluates a form that should vanish at random
  points,
* :func:`numeric_identity_check` does the same for a combination of forms
  and exterior derivatives, the latter taken numerically by
  :func:`numeric_exterior_derivative`.

Rational points give exact results; points carrying opaque atoms are
evaluated in floats and compared with relative tolerances.
'''
import logging
from dataclasses import dataclass, field

import numpy as np
import sympy as sp

from jetforms import _, settings
from jetforms.forms.basis import CONTACT, DX
from jetforms.forms.vector import ProlongedField
from jetforms.geomver.points import (METRIC_ATTEMPTS, JetPoint,
        random_rational)
from jetforms.jetcore import calculus
from jetforms.jetcore.exceptions import SingularMetricError
from jetforms.varcalc.lepage import LepageResult
from jetforms.varcalc.noether import current_components, noether_current

log = logging.getLogger(__name__)

@dataclass
class VerificationReport:
    '''Aggregated outcome of a seeded numeric check'''
    suite: str
    seed: int
    trials: int
    max_residual: float = 0.0
    failures: list = field(default_factory=list)
    resampled: int = 0

    @property
    def passed(self):
        return not self.failures

    def record(self, residual, tolerance, label):
        '''Fold one residual into the report'''
        residual = float(abs(residual))
        self.max_residual = max(self.max_residual, residual)
        if residual > tolerance:
            self.failures.append(_('%(label)s: residual %(residual).3e') %
                    {'label': label, 'residual': residual})

    def as_dict(self):
        return {'suite': self.suite, 'seed': self.seed, 'trials': self.trials,
                'max_residual': self.max_residual,
                'resampled': self.resampled,
                'failures': list(self.failures)}

#
# Form evaluation
#

def _factor_value(chart, factor, point, vector, positions):
    if factor.kind == DX:
        return vector[positions[chart.base_symbol(factor.index)]]
    value = vector[positions[chart.fiber_symbol(factor.field, factor.multi)]]
    if factor.kind == CONTACT:
        for j in range(chart.n):
            value = value - point.value(chart.fiber_symbol(factor.field,
                factor.multi.add(j))) * vector[positions[chart.base_symbol(j)]]
    return value

def term_contributions(rho, point, vectors, coefficients=None):
    '''Value of each term of `rho` on the vectors, in
    :meth:`~jetforms.forms.form.DiffForm.sorted_terms` order

    :kwarg coefficients: precomputed coefficient values in the same order
    '''
    chart = rho.chart
    if len(vectors) != rho.degree:
        raise ValueError(_('a %(degree)s-form needs %(degree)s vectors, got'
            ' %(count)s') % {'degree': rho.degree, 'count': len(vectors)})
    symbols = chart.coordinates(rho.order)
    positions = dict((symbol, position)
            for position, symbol in enumerate(symbols))
    for vector in vectors:
        if len(vector) != len(symbols):
            raise ValueError(_('tangent vectors on order %(order)s have'
                ' %(size)s components') % {'order': rho.order,
                    'size': len(symbols)})
    exact = point.exact and all(sp.sympify(entry).is_Rational
            for vector in vectors for entry in vector)
    contributions = []
    for position, (monomial, coeff) in enumerate(rho.sorted_terms()):
        if coefficients is None:
            value = point.evaluate(coeff)
        else:
            value = coefficients[position]
        rows = [[_factor_value(chart, factor, point, vector, positions)
            for vector in vectors] for factor in monomial]
        determinant = _determinant(rows, exact)
        contributions.append(value * determinant if exact
                else float(value) * float(determinant))
    return contributions

def eval_form(rho, point, vectors):
    '''Evaluate a form at a jet point on tangent vectors

    :arg rho: a :class:`~jetforms.forms.form.DiffForm`
    :arg point: a :class:`~jetforms.geomver.points.JetPoint` with values up
        to ``rho.order``
    :arg vectors: ``rho.degree`` component sequences aligned with
        ``chart.coordinates(rho.order)``
    :returns: an exact rational when the point and vectors are rational, a
        float otherwise
    :raises MissingAssignmentError: naming a coordinate without value
    '''
    contributions = term_contributions(rho, point, vectors)
    if point.exact and all(isinstance(value, sp.Basic)
            for value in contributions):
        return sp.Add(*contributions)
    return float(sum(contributions))

def random_vectors(chart, order, count, rng, exact=True):
    '''Random tangent vectors at order `order`'''
    size = len(chart.coordinates(order))
    if exact:
        return [[random_rational(rng) for _index in range(size)]
                for _count in range(count)]
    return [list(rng.uniform(-1, 1, size)) for _count in range(count)]

#
# Section checks
#

def section_pullback_check(rho, lagrangian, section, points):
    '''Largest ``|(J gamma* rho - J gamma* lambda)(d_0, ..., d_{n-1})|`` over
    the base points

    Zero, exactly, for every Lepage equivalent of `lagrangian`.
    '''
    if isinstance(rho, LepageResult):
        rho = rho.form
    order = max(rho.order, lagrangian.order)
    difference = rho.lift(order) - lagrangian.form().lift(order)
    residual = sp.S.Zero
    for base_point in points:
        point = section.jet_point(base_point, order + 1)
        vectors = section.tangent_vectors(base_point, order)
        value = eval_form(difference, point, vectors)
        residual = max(residual, abs(sp.sympify(value)))
    return residual

def _section_value(expr, section, base_point, order):
    return section.jet_point(base_point, order).evaluate(expr)

def finite_difference_check(f, section, index, x0, h=settings.FD_STEP):
    '''``|central difference of f along J gamma - d_index f|`` at ``x0``

    The step is converted to an exact rational, so the residual is exactly
    the truncation error of the difference quotient, ``O(h^2)``.

    :arg f: a :class:`~jetforms.jetcore.expr.ScalarExpr`
    :returns: the residual as a float
    '''
    chart = f.chart
    step = sp.nsimplify(h, rational=True)
    order = f.order + 1
    derivative = calculus.total_derivative(chart, f.expr, index)
    shifted = [list(sp.sympify(x0, rational=True)) for _sign in (1, -1)]
    shifted[0][index] += step
    shifted[1][index] -= step
    forward = _section_value(f.expr, section, shifted[0], order)
    backward = _section_value(f.expr, section, shifted[1], order)
    analytic = _section_value(derivative, section, x0, order)
    return float(abs((forward - backward) / (2 * step) - analytic))

def first_variation_check(theta, lagrangian, xi, section, x0,
        h=settings.FD_STEP):
    '''Residual of the first variation formula along a section

    ``J gamma* L_{J Xi} lambda = J gamma* i_{J Xi} d theta
    + d J gamma* h i_{J Xi} theta`` evaluated on ``(d_0, ..., d_{n-1})`` at
    ``x0``.  The left side is ``(J Xi . L + L div xi)``, the divergence of
    the current is taken by central differences.

    :returns: ``|lhs - rhs| / max(1, |lhs|)`` as a float
    '''
    if isinstance(theta, LepageResult):
        theta = theta.form
    chart = lagrangian.chart
    x0 = [sp.sympify(value, rational=True) for value in x0]
    step = sp.nsimplify(h, rational=True)
    density = lagrangian.density
    prolonged = ProlongedField(xi, max(lagrangian.order, theta.order + 1))

    change = [xi.xi[index] * sp.diff(density, chart.base_symbol(index)) +
            density * sp.diff(xi.xi[index], chart.base_symbol(index))
            for index in range(chart.n)]
    for symbol, partial in calculus.jet_gradient(chart, density).items():
        coordinate = chart.coordinate(symbol)
        change.append(prolonged.component(coordinate.field, coordinate.multi)
                * partial)
    order = theta.order + 2
    point = section.jet_point(x0, order)
    lhs = point.evaluate(sp.Add(*change))

    d_theta = theta.exterior_derivative()
    contracted = d_theta.interior(prolonged)
    rhs = eval_form(contracted, section.jet_point(x0, contracted.order + 1),
            section.tangent_vectors(x0, contracted.order))

    components = current_components(noether_current(theta, xi))
    for index, component in enumerate(components):
        forward = list(x0)
        backward = list(x0)
        forward[index] += step
        backward[index] -= step
        difference = _section_value(component, section, forward, order) - \
                _section_value(component, section, backward, order)
        rhs += difference / (2 * step)
    lhs = sp.sympify(lhs)
    return float(abs(lhs - rhs) / max(1, abs(lhs)))

#
# Numeric exterior derivative
#

def _determinant(rows, exact):
    if not rows:
        return 1
    if exact:
        return sp.Matrix(rows).det()
    return float(np.linalg.det(np.array(rows, dtype=float)))

def _factor_rate(chart, factor, direction, vector, positions):
    # only the contact factors depend on the point
    if factor.kind != CONTACT:
        return 0
    return -sum(direction[positions[chart.fiber_symbol(factor.field,
        factor.multi.add(j))]] * vector[positions[chart.base_symbol(j)]]
        for j in range(chart.n))

def _exact_directional(rho, point, vectors, direction):
    '''Exact derivative of ``p -> rho_p(vectors)`` along `direction`'''
    chart = rho.chart
    symbols = chart.coordinates(rho.order)
    positions = dict((symbol, position)
            for position, symbol in enumerate(symbols))
    shift = dict((symbol, component)
            for symbol, component in zip(symbols, direction) if component)
    step = sp.Dummy('step')
    total = []
    for monomial, coeff in rho.sorted_terms():
        coeff = sp.sympify(coeff)
        mapping = dict((symbol, point.value(symbol) + shift.get(symbol, 0) *
            step) for symbol in coeff.free_symbols)
        slope = sp.diff(coeff.xreplace(mapping), step).subs(step, 0)
        rows = [[_factor_value(chart, factor, point, vector, positions)
            for vector in vectors] for factor in monomial]
        rates = [[_factor_rate(chart, factor, direction, vector, positions)
            for vector in vectors] for factor in monomial]
        value = slope * _determinant(rows, True)
        for index, rate in enumerate(rates):
            if any(rate):
                value += point.evaluate(coeff) * _determinant(
                        rows[:index] + [rate] + rows[index + 1:], True)
        total.append(value)
    return sp.Add(*total)

def _shifted_point(point, symbols, direction, step):
    chart = point.chart
    values = dict((symbol, float(point.value(symbol)) + step * float(
        component)) for symbol, component in zip(symbols, direction))
    for symbol in chart.param_symbols:
        values[symbol] = float(point.value(symbol))
    return JetPoint(chart, values, point.order)

def _central_difference(rho, point, vectors, direction, h):
    symbols = rho.chart.coordinates(rho.order)
    forward = _shifted_point(point, symbols, direction, h)
    backward = _shifted_point(point, symbols, direction, -h)
    return (eval_form(rho, forward, vectors) -
            eval_form(rho, backward, vectors)) / (2 * h)

def numeric_exterior_derivative(rho, point, vectors, h=settings.FD_STEP):
    '''Value of ``d rho`` on ``degree + 1`` vectors with constant components

    Uses ``d rho(V_0, ..., V_k) = sum_i (-1)^i V_i(rho(V_0, ..., V_k))``
    with ``V_i`` left out of the inner evaluation; the symbolic
    :meth:`~jetforms.forms.form.DiffForm.exterior_derivative` is never
    called.  On exact points the directional derivatives are exact, on
    float points they are central differences with steps `h` and ``h / 2``
    combined by one Richardson step, the opaque atoms being recomputed at
    the shifted points.

    :arg rho: a form whose coefficients live on ``J^{rho.order} Y``
    :arg vectors: ``rho.degree + 1`` component sequences aligned with
        ``chart.coordinates(rho.order)``
    :raises ValueError: on the wrong number of vectors or coefficients above
        the order of `rho`
    '''
    if len(vectors) != rho.degree + 1:
        raise ValueError(_('d of a %(degree)s-form needs %(count)s vectors')
                % {'degree': rho.degree, 'count': rho.degree + 1})
    if rho.max_coefficient_order() > rho.order:
        raise ValueError(_('coefficients of order %(order)s on a form of'
            ' order %(form)s') % {'order': rho.max_coefficient_order(),
                'form': rho.order})
    exact = point.exact and all(sp.sympify(entry).is_Rational
            for vector in vectors for entry in vector)
    total = 0
    for index, direction in enumerate(vectors):
        others = vectors[:index] + vectors[index + 1:]
        if exact:
            value = _exact_directional(rho, point, others, direction)
        else:
            coarse = _central_difference(rho, point, others, direction, h)
            fine = _central_difference(rho, point, others, direction, h / 2)
            value = (4 * fine - coarse) / 3
        total += (-1) ** index * value
    return total if exact else float(total)

#
# Numeric zero checks
#

def sample_point(chart, order, rng, report, exact=True):
    '''A random jet point, degenerate metric samples drawn again

    Every rejected metric sample is counted in ``report.resampled``.  After
    :data:`~jetforms.geomver.points.METRIC_ATTEMPTS` failed draws a failure
    is recorded and :data:`None` returned.
    '''
    for _attempt in range(METRIC_ATTEMPTS):
        try:
            point = JetPoint.random(chart, order, rng, exact=exact)
        except SingularMetricError:
            report.resampled += METRIC_ATTEMPTS
            continue
        report.resampled += point.resampled
        return point
    report.failures.append(_('no nondegenerate metric after %(count)s'
        ' draws') % {'count': METRIC_ATTEMPTS * METRIC_ATTEMPTS})
    return None

def numeric_zero_check(rho, trials=10, seed=settings.DEFAULT_SEED,
        suite='zero', tolerance=settings.ALGEBRAIC_TOLERANCE):
    '''Evaluate a form that should vanish at random points

    Rational points must give exactly zero; float points (charts with
    opaque symbols) a residual below `tolerance` relative to the sum of the
    absolute term contributions.

    :returns: a :class:`VerificationReport` whose ``trials`` counts the
        evaluations actually made
    '''
    chart = rho.chart
    rng = np.random.default_rng(seed)
    report = VerificationReport(suite, seed, 0)
    exact = not chart.opaque_symbols
    for trial in range(trials):
        point = sample_point(chart, rho.order + 1, rng, report, exact)
        if point is None:
            break
        if rho.degree:
            vectors = random_vectors(chart, rho.order, rho.degree, rng,
                    exact=exact)
        else:
            vectors = []
        contributions = term_contributions(rho, point, vectors)
        report.trials += 1
        label = _('trial %(trial)s') % {'trial': trial}
        if exact:
            report.record(sp.Add(*contributions), 0, label)
            continue
        scale = max(1.0, sum(abs(value) for value in contributions))
        report.record(sum(contributions) / scale, tolerance, label)
    log.debug('%s: %s trials, %s resampled, max residual %s', suite,
            report.trials, report.resampled, report.max_residual)
    return report

def numeric_identity_check(terms, trials=10, seed=settings.DEFAULT_SEED,
        suite='identity', tolerance=None):
    '''Evaluate a linear combination of forms that should vanish

    :arg terms: ``(coefficient, form, differentiate)`` triples.  With
        `differentiate` the form enters through
        :func:`numeric_exterior_derivative`, so symbolic and numeric
        derivatives can be compared.  All summands must have one degree.
    :kwarg tolerance: relative tolerance at float points; defaults to
        ``FD_TOLERANCE`` when a difference quotient is involved,
        ``ALGEBRAIC_TOLERANCE`` otherwise
    :returns: a :class:`VerificationReport`
    :raises ValueError: if the summands have different degrees
    '''
    degrees = set(form.degree + int(bool(differentiate))
            for _coefficient, form, differentiate in terms)
    if len(degrees) != 1:
        raise ValueError(_('summands of degrees %(degrees)s') %
                {'degrees': sorted(degrees)})
    degree = degrees.pop()
    order = max(max(form.order, form.max_coefficient_order())
            for _coefficient, form, _differentiate in terms)
    terms = [(coefficient, form.lift(order), differentiate)
            for coefficient, form, differentiate in terms]
    chart = terms[0][1].chart
    exact = not chart.opaque_symbols
    if tolerance is None:
        differences = any(term[2] for term in terms)
        tolerance = settings.FD_TOLERANCE if differences else \
                settings.ALGEBRAIC_TOLERANCE
    rng = np.random.default_rng(seed)
    report = VerificationReport(suite, seed, 0)
    for trial in range(trials):
        point = sample_point(chart, order, rng, report, exact)
        if point is None:
            break
        vectors = random_vectors(chart, order, degree, rng, exact=exact)
        values = []
        for coefficient, form, differentiate in terms:
            if differentiate:
                value = numeric_exterior_derivative(form, point, vectors)
            else:
                value = eval_form(form, point, vectors)
            values.append(coefficient * value)
        report.trials += 1
        label = _('trial %(trial)s') % {'trial': trial}
        if exact:
            report.record(sp.Add(*values), 0, label)
            continue
        scale = max(1.0, sum(abs(float(value)) for value in values))
        report.record(float(sum(values)) / scale, tolerance, label)
    log.debug('%s: %s trials, max residual %s', suite, report.trials,
            report.max_residual)
    return report

__all__ = ('VerificationReport', 'eval_form', 'finite_difference_check',
        'first_variation_check', 'numeric_exterior_derivative',
        'numeric_identity_check', 'numeric_zero_check', 'random_vectors',
        'sample_point', 'section_pullback_check', 'term_contributions')
