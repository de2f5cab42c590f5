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
----------------------
The Hilbert Lagrangian
----------------------

The metric bundle over an n-dimensional base: the fields are the
components ``g_p_q`` (``p <= q``) of a symmetric metric, ``ginv`` is its
inverse and ``vol = sqrt|det g|``.  With the Christoffel symbols
``Gamma^c_ab = ginv^cd (g_da,b + g_db,a - g_ab,d) / 2`` and the Ricci
tensor ``R_ab = d_c Gamma^c_ab - d_b Gamma^c_ac + Gamma^c_cd Gamma^d_ab -
Gamma^c_bd Gamma^d_ac``:

* ``lambda_g = R vol w_0``, second order,
* ``lambda'_g = vol ginv^ab (Gamma^c_ad Gamma^d_bc - Gamma^c_ab Gamma^d_cd)
  w_0``, first order,
* ``alpha = vol (ginv^ab Gamma^i_ab - ginv^ia Gamma^b_ab) w_i`` with
  ``lambda_g = lambda'_g + h d alpha``.

None of these identities can be decided by syntactic comparison of the
atoms; :func:`hilbert_numeric_suite` checks them at random metric jets.
'''
import functools
import logging
from dataclasses import dataclass

import numpy as np
import sympy as sp

from jetforms import settings
from jetforms.forms.basis import CONTACT, DX, dx_basis
from jetforms.forms.form import DiffForm, omega
from jetforms.geomver.checks import (VerificationReport, random_vectors,
        sample_point)
from jetforms.jetcore import calculus
from jetforms.jetcore.chart import ChartSpec
from jetforms.jetcore.opaque import InverseMetric, VolumeFactor, metric_field
from jetforms.varcalc.lagrangian import Lagrangian
from jetforms.varcalc.lepage import principal_lepage

log = logging.getLogger(__name__)

METRIC = 'g'

@dataclass
class HilbertProblem:
    '''The Hilbert Lagrangian, its first order reduction and the splitting
    form'''
    chart: ChartSpec
    lagrangian: Lagrangian
    lagrangian_prime: Lagrangian
    alpha: DiffForm
    inverse: InverseMetric
    volume: VolumeFactor

def metric_chart(n, max_order=None):
    '''Chart of the metric bundle with the ``ginv`` and ``vol`` symbols'''
    fields = [metric_field(METRIC, p, q) for p in range(n)
            for q in range(p, n)]
    inverse = InverseMetric('ginv', METRIC, n)
    volume = VolumeFactor('vol', METRIC, n, inverse)
    chart = ChartSpec(['x%s' % index for index in range(n)], fields,
            opaque_symbols=(inverse, volume), max_order=max_order)
    return chart, inverse, volume

def christoffel(chart, inverse):
    '''``Gamma[c][a][b] = Gamma^c_ab`` as nested lists of expressions'''
    n = chart.n

    def dg(a, b, c):
        return chart.fiber_symbol(metric_field(METRIC, a, b), (c,))

    first = [[[sp.Rational(1, 2) * (dg(c, a, b) + dg(c, b, a) - dg(a, b, c))
        for b in range(n)] for a in range(n)] for c in range(n)]
    return [[[sp.Add(*[inverse.atom(c, d) * first[d][a][b]
        for d in range(n)]) for b in range(n)] for a in range(n)]
        for c in range(n)]

def hilbert_problem(n, max_order=None):
    '''Build ``lambda_g``, ``lambda'_g`` and ``alpha`` over an n-dimensional
    base

    :returns: a :class:`HilbertProblem`
    '''
    chart, inverse, volume = metric_chart(n, max_order)
    gamma = christoffel(chart, inverse)
    indices = range(n)

    def d(expr, index):
        return calculus.total_derivative(chart, expr, index)

    ricci = {}
    for a in indices:
        for b in indices:
            terms = [d(gamma[c][a][b], c) for c in indices]
            terms.append(-d(sp.Add(*[gamma[c][a][c] for c in indices]), b))
            for c in indices:
                for e in indices:
                    terms.append(gamma[c][c][e] * gamma[e][a][b] -
                            gamma[c][b][e] * gamma[e][a][c])
            ricci[(a, b)] = sp.Add(*terms)
    scalar = sp.Add(*[inverse.atom(a, b) * ricci[(a, b)]
        for a in indices for b in indices])
    density = volume.symbol * scalar

    reduced = sp.Add(*[inverse.atom(a, b) * (gamma[c][a][e] * gamma[e][b][c]
        - gamma[c][a][b] * gamma[e][c][e])
        for a in indices for b in indices for c in indices for e in indices])
    density_prime = volume.symbol * reduced

    alpha = DiffForm.zero(chart, 1, n - 1)
    for i in indices:
        component = volume.symbol * (sp.Add(*[inverse.atom(a, b) *
            gamma[i][a][b] for a in indices for b in indices]) -
            sp.Add(*[inverse.atom(i, a) * gamma[b][a][b]
                for a in indices for b in indices]))
        alpha = alpha + omega(chart, (i,), 1) * component
    log.debug('Hilbert problem built for n = %s', n)
    return HilbertProblem(chart, Lagrangian(chart, density, order=2),
            Lagrangian(chart, density_prime, order=1), alpha, inverse,
            volume)

def reduced_gradient_closed_form(n, metric, derivatives):
    '''``d L'_g / d g_pq,r`` evaluated from the Christoffel symbols

    With all indices raised by ``ginv``, ``V^p = ginv^pa Gamma^k_ak`` and
    ``W^r = ginv^ab Gamma^r_ab``, the derivative along a variation of
    ``g_pq,r`` taken as independent of ``g_qp,r`` is

        ``F^pqr = vol (Gamma^rpq - ginv^qr V^p + ginv^pq (V^r - W^r) / 2)``

    and the chart coordinate ``g_p_q`` (``p < q``) stands for both.

    :arg metric: ``(n, n)`` array of ``g_pq``
    :arg derivatives: ``(n, n, n)`` array of ``g_pq,r``
    :returns: mapping ``(p, q, r) -> float`` for ``p <= q``
    '''
    inverse = np.linalg.inv(metric)
    volume = np.sqrt(abs(np.linalg.det(metric)))
    first = 0.5 * (derivatives + np.einsum('cba->cab', derivatives) -
            np.einsum('abc->cab', derivatives))
    gamma = np.einsum('cd,dab->cab', inverse, first)
    raised = np.einsum('ra,pb,qc,abc->rpq', inverse, inverse, inverse, first)
    traces = inverse @ np.einsum('kak->a', gamma)
    contracted = np.einsum('ab,rab->r', inverse, gamma)
    full = volume * (np.einsum('rpq->pqr', raised) -
            np.einsum('qr,p->pqr', inverse, traces) +
            0.5 * np.einsum('pq,r->pqr', inverse, traces - contracted))
    gradient = {}
    for p in range(n):
        for q in range(p, n):
            for r in range(n):
                value = full[p, q, r]
                if p != q:
                    value = value + full[q, p, r]
                gradient[(p, q, r)] = float(value)
    return gradient

class _Compiled(object):
    '''A list of expressions compiled once with :func:`sympy.lambdify`'''
    def __init__(self, chart, order, exprs):
        self.symbols = chart.coordinates(order) + sorted(chart.atoms,
                key=sp.default_sort_key)
        self.size = len(exprs)
        self.function = sp.lambdify(self.symbols, list(exprs),
                modules='numpy', cse=True)

    def __call__(self, points):
        '''Values at all points in one call

        :returns: array of shape ``(len(exprs), len(points))``
        '''
        arguments = [np.array([float(point.value(symbol)) for point in points])
                for symbol in self.symbols]
        shape = (len(points),)
        values = [np.broadcast_to(np.asarray(value, dtype=float), shape)
                for value in self.function(*arguments)]
        return np.array(values).reshape(self.size, len(points))

def _metric_arrays(chart, point):
    n = chart.n
    metric = np.empty((n, n))
    derivatives = np.empty((n, n, n))
    for p in range(n):
        for q in range(n):
            field = metric_field(METRIC, p, q)
            metric[p, q] = float(point.value(chart.fiber_symbol(field)))
            for r in range(n):
                derivatives[p, q, r] = float(point.value(
                    chart.fiber_symbol(field, (r,))))
    return metric, derivatives

def _factor_rows(chart, factor, points, vectors, positions):
    '''Values of a basis one-form on the vectors of every trial, shape
    ``(trials, degree)``'''
    if factor.kind == DX:
        return vectors[:, :, positions[chart.base_symbol(factor.index)]]
    rows = vectors[:, :, positions[chart.fiber_symbol(factor.field,
        factor.multi)]].copy()
    if factor.kind == CONTACT:
        for j in range(chart.n):
            symbol = chart.fiber_symbol(factor.field, factor.multi.add(j))
            values = np.array([float(point.value(symbol)) for point in points])
            rows -= values[:, None] * vectors[:, :, positions[
                chart.base_symbol(j)]]
    return rows

def _batch_contributions(rho, points, vectors, coefficients):
    '''Term values of `rho` for all trials, shape ``(terms, trials)``

    :arg vectors: array of shape ``(trials, degree, coordinates)``
    :arg coefficients: array of shape ``(terms, trials)``
    '''
    chart = rho.chart
    positions = dict((symbol, position)
            for position, symbol in enumerate(chart.coordinates(rho.order)))
    rows = {}
    contributions = np.empty_like(coefficients)
    for position, (monomial, _coeff) in enumerate(rho.sorted_terms()):
        for factor in monomial:
            if factor not in rows:
                rows[factor] = _factor_rows(chart, factor, points, vectors,
                        positions)
        matrices = np.stack([rows[factor] for factor in monomial], axis=1)
        contributions[position] = coefficients[position] * \
                np.linalg.det(matrices)
    return contributions

@dataclass
class _SuiteSetup:
    chart: ChartSpec
    coordinates: list
    rho: DiffForm
    gradient: _Compiled
    coefficients: _Compiled
    split: _Compiled

@functools.lru_cache(maxsize=None)
def _suite_setup(n):
    '''Symbolic work of :func:`hilbert_numeric_suite`, done once per
    dimension'''
    problem = hilbert_problem(n)
    chart = problem.chart
    coordinates = [(p, q, r, chart.fiber_symbol(metric_field(METRIC, p, q),
        (r,))) for p in range(n) for q in range(p, n) for r in range(n)]
    gradient = calculus.jet_gradient(chart, problem.lagrangian_prime.density)
    d_alpha = problem.alpha.exterior_derivative()
    rho = principal_lepage(problem.lagrangian).form - \
            principal_lepage(problem.lagrangian_prime).form - d_alpha
    volume_monomial = tuple(dx_basis(index) for index in range(n))
    split_density = d_alpha.horizontal().terms.get(volume_monomial, 0)
    order = rho.order + 1
    log.debug('Hilbert suite n=%s: %s terms to evaluate', n, len(rho))
    return _SuiteSetup(chart, coordinates, rho,
            _Compiled(chart, order, [gradient.get(symbol, 0)
                for _p, _q, _r, symbol in coordinates]),
            _Compiled(chart, order, [coeff
                for _monomial, coeff in rho.sorted_terms()]),
            _Compiled(chart, order, [problem.lagrangian.density,
                problem.lagrangian_prime.density, split_density]))

def hilbert_numeric_suite(seed=settings.DEFAULT_SEED, trials=50, n=4,
        tolerance=settings.ALGEBRAIC_TOLERANCE):
    '''Check the Hilbert identities at random metric jets

    Three residuals are folded into the report, all relative:

    * the gradient of ``lambda'_g`` by the first derivatives of the metric
      against :func:`reduced_gradient_closed_form`,
    * ``Theta_{lambda_g} - Theta_{lambda'_g} - d alpha`` on random vectors,
    * ``lambda_g - lambda'_g - h d alpha``.

    The symbolic side is built and compiled once per dimension; all points
    are then evaluated in one vectorized pass.  Metric samples too close to
    degenerate are drawn again and counted in
    :attr:`~jetforms.geomver.checks.VerificationReport.resampled`.
    '''
    setup = _suite_setup(n)
    chart = setup.chart
    rho = setup.rho
    rng = np.random.default_rng(seed)
    report = VerificationReport('hilbert', seed, 0)
    points = []
    vectors = []
    for _trial in range(trials):
        point = sample_point(chart, rho.order + 1, rng, report, exact=False)
        if point is None:
            break
        points.append(point)
        vectors.append(random_vectors(chart, rho.order, rho.degree, rng,
            exact=False))
    report.trials = len(points)
    if not points:
        return report

    gradients = setup.gradient(points)
    for trial, point in enumerate(points):
        closed = reduced_gradient_closed_form(n, *_metric_arrays(chart, point))
        for (p, q, r, _symbol), value in zip(setup.coordinates,
                gradients[:, trial]):
            expected = closed[(p, q, r)]
            report.record((value - expected) / max(1.0, abs(expected)),
                    tolerance, 'gradient %s%s,%s trial %s' % (p, q, r, trial))

    contributions = _batch_contributions(rho, points, np.array(vectors),
            setup.coefficients(points))
    totals = contributions.sum(axis=0)
    scales = np.maximum(1.0, np.abs(contributions).sum(axis=0))
    full, prime, divergence = setup.split(points)
    split_scales = np.maximum(1.0, np.maximum(np.abs(full), np.abs(prime)))
    for trial in range(len(points)):
        report.record(totals[trial] / scales[trial], tolerance,
                'theta trial %s' % trial)
        report.record((full[trial] - prime[trial] - divergence[trial]) /
                split_scales[trial], tolerance, 'split trial %s' % trial)
    log.debug('hilbert suite n=%s: max residual %s, %s resampled', n,
            report.max_residual, report.resampled)
    return report

__all__ = ('HilbertProblem', 'METRIC', 'christoffel', 'hilbert_numeric_suite',
        'hilbert_problem', 'metric_chart', 'reduced_gradient_closed_form')
