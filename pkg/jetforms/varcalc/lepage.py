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
------------------
Lepage equivalents
------------------

Four ways to attach a Lepage equivalent ``theta`` (an n-form with
``h theta = lambda`` and ``p_1 d theta`` a source form) to a Lagrangian:

:func:`principal_lepage`
    the principal form ``Theta``, order ``2r - 1``
:func:`fundamental_lepage`
    the fundamental form ``rho`` of a first order Lagrangian, carrying
    contact terms up to degree ``min(m, n)``
:func:`canonical_lepage`
    the canonical form ``Phi = Theta_{lambda_VT} + d alpha`` built from the
    homotopy splitting of ``Theta``; closed whenever the Lagrangian is
    trivial
:func:`reduced_lepage`
    ``phi = Theta_{lambda'} + d alpha`` for a caller supplied splitting
    ``lambda = lambda' + h d alpha``

:func:`lepage_equivalent` dispatches on the name of the kind.
'''
import functools
import logging
import math
from dataclasses import dataclass

import sympy as sp

from jetforms import _
from jetforms.forms.basis import contact_basis, dx_basis
from jetforms.forms.exceptions import FormError
from jetforms.forms.form import DiffForm, omega
from jetforms.jetcore import calculus
from jetforms.varcalc.euler import euler_lagrange
from jetforms.varcalc.exceptions import (CorrectionMismatchError,
        FirstOrderRequiredError, OrderBoundError, SplitError)
from jetforms.varcalc.homotopy import homotopy_I, vainberg_tonti
from jetforms.varcalc.lagrangian import (Lagrangian, SourceForm,
        is_affine_in_top_order)

log = logging.getLogger(__name__)

PRINCIPAL = 'principal'
FUNDAMENTAL = 'fundamental'
CANONICAL = 'canonical'
REDUCED = 'reduced'

#: Names accepted by :func:`lepage_equivalent`
KINDS = (PRINCIPAL, FUNDAMENTAL, CANONICAL, REDUCED)

class LepageResult(object):
    '''A Lepage equivalent together with how it was obtained

    :arg form: the n-form
    :arg kind: one of :data:`KINDS`
    :arg lagrangian: the Lagrangian it is an equivalent of
    :kwarg provenance: the pieces it was assembled from; keys depend on the
        kind (``split``, ``lambda_vt``, ``alpha``, ``d_alpha``, ``theta``,
        ``lambda_prime``, ``split_checked``)
    :kwarg natural_order: the natural order when it is already known
    '''
    def __init__(self, form, kind, lagrangian, provenance=None,
            natural_order=None):
        self.form = form
        self.kind = kind
        self.lagrangian = lagrangian
        self.provenance = provenance or {}
        if natural_order is not None:
            self.__dict__['natural_order'] = natural_order

    @functools.cached_property
    def natural_order(self):
        return self.form.natural_order()

    @functools.cached_property
    def contact_degrees(self):
        return tuple(self.form.contact_degrees())

    def __repr__(self):
        return 'LepageResult(%s, order=%s, %s)' % (self.kind, self.form.order,
                self.form)

def _omega_factors(chart, indices):
    '''``(sign, monomial)`` with ``w_indices = sign * monomial``'''
    form = omega(chart, indices)
    if form.is_zero():
        return 0, ()
    ((monomial, sign),) = form.terms.items()
    return sign, monomial

def _volume(chart):
    return tuple(dx_basis(index) for index in range(chart.n))

#
# Principal and fundamental forms
#

def principal_lepage(lagrangian):
    '''The principal Lepage equivalent

    ``Theta = L w_0 + sum_{k, l} (-1)^l d_{p_1..p_l} dL/dy^sigma_{j_1..j_k
    p_1..p_l i} w^sigma_{j_1..j_k} ^ w_i`` with ``k + l <= r - 1`` and all
    indices summed over.  In sorted multi-indices a derivative with respect
    to ``y^sigma_K`` is divided by the number of orderings of ``K`` while
    the sums over ``J`` and ``P`` are weighted by theirs.

    The form lives on ``J^{2r-1} Y``; a Lagrangian of order zero is its own
    principal form.

    :raises OrderBoundError: if the density is affine in the top order
        coordinates but the form's natural order exceeds ``2r - 2``
    '''
    chart = lagrangian.chart
    order = lagrangian.order
    if order == 0:
        return LepageResult(lagrangian.form(), PRINCIPAL, lagrangian,
                natural_order=0)
    gradient = calculus.jet_gradient(chart, lagrangian.density)
    pieces = [(lagrangian.density, _volume(chart))]
    derivatives = {}
    for field in chart.fields:
        for length in range(order):
            for multi in chart.multi_indices(length):
                for index in range(chart.n):
                    parts = []
                    for shift in chart.multi_indices_upto(order - 1 - length):
                        target = multi.union(shift).add(index)
                        key = (field, target, shift)
                        if key not in derivatives:
                            partial = gradient.get(
                                    chart.fiber_symbol(field, target))
                            if partial is not None:
                                partial = calculus.iterated_total_derivative(
                                        chart, partial, shift)
                            derivatives[key] = partial
                        value = derivatives[key]
                        if value is None:
                            continue
                        weight = sp.Rational(shift.permutations(),
                                target.permutations())
                        if len(shift) % 2:
                            weight = -weight
                        parts.append(weight * value)
                    if not parts:
                        continue
                    sign, monomial = _omega_factors(chart, (index,))
                    pieces.append((sign * multi.permutations() * sp.Add(*parts),
                        (contact_basis(field, multi),) + monomial))
    form = DiffForm.from_terms(chart, 2 * order - 1, chart.n, pieces)
    natural = None
    if not form.has_atoms():
        natural = form.natural_order()
        if natural > 2 * order - 2 and is_affine_in_top_order(lagrangian):
            raise OrderBoundError(_('principal form of a Lagrangian affine in'
                ' its top order has order %(natural)s, above %(bound)s') %
                {'natural': natural, 'bound': 2 * order - 2}, residual=form)
    log.debug('principal Lepage form: %s terms on order %s', len(form),
            form.order)
    return LepageResult(form, PRINCIPAL, lagrangian, natural_order=natural)

def fundamental_lepage(lagrangian):
    '''The fundamental Lepage equivalent of a first order Lagrangian

    ``rho = L w_0 + sum_k 1/(k!)^2 d^k L / dy^{s_1}_{i_1}..dy^{s_k}_{i_k}
    w^{s_1} ^ .. ^ w^{s_k} ^ w_{i_1..i_k}``

    Sequences that repeat a field or a base index vanish and are skipped, so
    ``k`` never exceeds ``min(m, n)``.

    :raises FirstOrderRequiredError: unless the declared order is one
    '''
    if lagrangian.order != 1:
        raise FirstOrderRequiredError(_('fundamental form requires first'
            ' order, got order %(order)s') % {'order': lagrangian.order})
    chart = lagrangian.chart
    limit = min(chart.m, chart.n)
    pieces = [(lagrangian.density, _volume(chart))]

    def expand(expr, fields, indices):
        count = len(fields)
        if count:
            sign, monomial = _omega_factors(chart, indices)
            weight = sp.Rational(sign, math.factorial(count) ** 2)
            pieces.append((weight * expr, tuple(contact_basis(field)
                for field in fields) + monomial))
        if count == limit:
            return
        for field in chart.fields:
            if field in fields:
                continue
            for index in range(chart.n):
                if index in indices:
                    continue
                derived = calculus.canonical(chart,
                        calculus.coordinate_partial(chart, expr,
                            chart.fiber_symbol(field, (index,))))
                if derived != 0:
                    expand(derived, fields + (field,), indices + (index,))

    expand(lagrangian.density, (), ())
    form = DiffForm.from_terms(chart, 1, chart.n, pieces)
    log.debug('fundamental Lepage form: %s terms', len(form))
    return LepageResult(form, FUNDAMENTAL, lagrangian)

#
# Canonical form
#

@dataclass
class CanonicalSplit:
    '''The homotopy splitting ``lambda = lambda_VT + h d alpha`` of a
    Lagrangian

    :attr:`d_alpha` includes the pullback of ``Theta`` by the zero section,
    so that ``Theta = I d Theta + d_alpha``.
    '''
    lagrangian: Lagrangian
    theta: DiffForm
    euler_lagrange: SourceForm
    lambda_vt: Lagrangian
    alpha: DiffForm
    d_alpha: DiffForm
    residual: DiffForm

    def holds(self):
        return self.residual.is_zero()

def canonical_split(lagrangian):
    '''Split a Lagrangian with the fibered homotopy operator

    ``alpha = I Theta``, ``lambda_VT`` is the Vainberg-Tonti Lagrangian of
    the Euler-Lagrange form and ``lambda_VT + h d alpha`` must give back
    ``lambda``.

    :raises SplitError: if the reconstruction leaves a residual
    :raises HomotopyError: if the Lagrangian is not polynomial in the fibers
    '''
    theta = principal_lepage(lagrangian).form
    source = euler_lagrange(lagrangian)
    lambda_vt = vainberg_tonti(source)
    alpha = homotopy_I(theta)
    d_alpha = alpha.exterior_derivative() + theta.pullback_zero_section()
    residual = lambda_vt.form() + d_alpha.horizontal() - lagrangian.form()
    split = CanonicalSplit(lagrangian, theta, source, lambda_vt, alpha,
            d_alpha, residual)
    if not split.holds():
        raise SplitError(_('lambda_VT + h d alpha does not reconstruct the'
            ' Lagrangian'), residual=residual)
    return split

def canonical_lepage(lagrangian):
    '''The canonical Lepage equivalent ``Phi = Theta_{lambda_VT} + d alpha``

    Re-expressed on ``J^{4r-2} Y``.  ``Phi`` is linear in the Lagrangian and
    closed for a trivial one.

    :raises OrderBoundError: if the natural order of ``Phi`` exceeds
        ``4r - 2``
    :raises HomotopyError: if the Lagrangian is not polynomial in the fibers
    '''
    split = canonical_split(lagrangian)
    bound = max(4 * lagrangian.order - 2, 0)
    theta_vt = principal_lepage(split.lambda_vt).form
    phi = theta_vt + split.d_alpha
    natural = phi.natural_order()
    if natural > bound:
        raise OrderBoundError(_('canonical form has order %(natural)s, above'
            ' %(bound)s') % {'natural': natural, 'bound': bound}, residual=phi)
    phi = phi.reduce_order(bound)
    log.debug('canonical Lepage form: %s terms, natural order %s', len(phi),
            natural)
    provenance = {'split': split, 'theta': split.theta,
            'lambda_vt': split.lambda_vt, 'alpha': split.alpha,
            'd_alpha': split.d_alpha}
    return LepageResult(phi, CANONICAL, lagrangian, provenance,
            natural_order=natural)

def theta_difference(lagrangian, canonical=None):
    '''``Phi - Theta``, checked against ``d alpha - Theta_{h d alpha}``

    :kwarg canonical: a :class:`LepageResult` from :func:`canonical_lepage`
        for the same Lagrangian, to avoid computing it twice
    :raises CorrectionMismatchError: if the two expressions differ
    '''
    if canonical is None:
        canonical = canonical_lepage(lagrangian)
    split = canonical.provenance['split']
    difference = canonical.form - split.theta
    remainder = Lagrangian(lagrangian.chart,
            lagrangian.density - split.lambda_vt.density,
            order=max(lagrangian.order, split.lambda_vt.order))
    expected = split.d_alpha - principal_lepage(remainder).form
    mismatch = difference - expected
    if not mismatch.is_zero():
        raise CorrectionMismatchError(_('Phi - Theta differs from d alpha -'
            ' Theta of h d alpha'), residual=mismatch)
    return difference

@dataclass
class NuCorrection:
    '''The first order relation ``Phi = Theta + p_1 d nu``'''
    nu: DiffForm
    correction: DiffForm
    alpha_components: tuple
    canonical: LepageResult

def horizontal_components(form):
    '''Components ``a^i`` of a horizontal (n-1)-form ``a^i w_i``

    :raises FormError: if the form has another degree or contact factors
    '''
    chart = form.chart
    if form.degree != chart.n - 1:
        raise FormError(_('expected an (n-1)-form, got degree %(degree)s') %
                {'degree': form.degree})
    if form.has_top_factors():
        form = form.lift(form.order + 1)
    known = set()
    components = []
    for index in range(chart.n):
        sign, monomial = _omega_factors(chart, (index,))
        known.add(monomial)
        components.append(sp.sympify(sign * form.terms.get(monomial, 0)))
    for monomial in form.terms:
        if monomial not in known:
            raise FormError(_('%(form)s is not horizontal') % {'form': form})
    return tuple(components)

def first_order_nu(lagrangian):
    '''The correction ``nu`` relating the canonical and principal forms of a
    first order Lagrangian

    ``nu = 1/4 (d alpha^j / dy^sigma_i - d alpha^i / dy^sigma_j) w^sigma ^
    w_ij`` where ``alpha = alpha^i w_i = I Theta``.  Checks ``Phi - Theta =
    p_1 d nu``.  For a one dimensional base ``nu`` is the zero 0-form.

    :returns: a :class:`NuCorrection`
    :raises FirstOrderRequiredError: unless the declared order is one
    :raises CorrectionMismatchError: if the relation fails
    '''
    if lagrangian.order != 1:
        raise FirstOrderRequiredError(_('the correction nu requires a first'
            ' order Lagrangian, got order %(order)s') %
            {'order': lagrangian.order})
    chart = lagrangian.chart
    canonical = canonical_lepage(lagrangian)
    split = canonical.provenance['split']
    alpha = horizontal_components(split.alpha)
    pieces = []
    if chart.n > 1:
        for field in chart.fields:
            for i in range(chart.n):
                for j in range(chart.n):
                    if i == j:
                        continue
                    value = calculus.coordinate_partial(chart, alpha[j],
                            chart.fiber_symbol(field, (i,))) - \
                            calculus.coordinate_partial(chart, alpha[i],
                            chart.fiber_symbol(field, (j,)))
                    if calculus.is_zero(chart, value):
                        continue
                    sign, monomial = _omega_factors(chart, (i, j))
                    pieces.append((sp.Rational(sign, 4) * value,
                        (contact_basis(field),) + monomial))
    nu = DiffForm.from_terms(chart, 1, chart.n - 1, pieces)
    if nu.is_zero():
        correction = DiffForm.zero(chart, 3, chart.n)
    else:
        correction = nu.exterior_derivative().contact_component(1)
    mismatch = canonical.form - split.theta - correction
    if not mismatch.is_zero():
        raise CorrectionMismatchError(_('Phi - Theta is not p_1 d nu'),
                residual=mismatch)
    return NuCorrection(nu, correction, alpha, canonical)

#
# Reduced form
#

def reduced_lepage(lagrangian, lagrangian_prime, alpha):
    '''The reduced Lepage equivalent ``phi = Theta_{lambda'} + d alpha``

    :arg lagrangian: ``lambda`` of order ``r``
    :arg lagrangian_prime: ``lambda'`` of order at most ``r``
    :arg alpha: an (n-1)-form with ``h d alpha = lambda - lambda'``
    :raises SplitError: if the splitting fails.  When opaque atoms are
        involved a syntactic mismatch proves nothing; the splitting is then
        recorded as unchecked (``provenance['split_checked']``) for numeric
        verification instead.
    :raises ValueError: if ``lambda'`` has a higher order than ``lambda``
    '''
    chart = lagrangian.chart
    if lagrangian_prime.chart != chart or alpha.chart != chart:
        raise FormError(_('the splitting lives on a different chart'))
    if alpha.degree != chart.n - 1:
        raise FormError(_('alpha must be an (n-1)-form, got degree'
            ' %(degree)s') % {'degree': alpha.degree})
    if lagrangian_prime.order > lagrangian.order:
        raise ValueError(_('the reduced Lagrangian has order %(prime)s, above'
            ' %(order)s') % {'prime': lagrangian_prime.order,
                'order': lagrangian.order})
    d_alpha = alpha.exterior_derivative()
    residual = d_alpha.horizontal() - (lagrangian.form() -
            lagrangian_prime.form())
    checked = True
    if not residual.is_zero():
        if not (residual.has_atoms() or lagrangian.has_atoms()):
            raise SplitError(_("h d alpha != lambda - lambda'"),
                    residual=residual)
        checked = False
        log.debug('splitting involves opaque atoms; left to numeric checks')
    phi = principal_lepage(lagrangian_prime).form + d_alpha
    natural = None
    if not phi.has_atoms():
        natural = phi.natural_order()
        phi = phi.reduce_order(max(natural, min(lagrangian.order, 1)))
    provenance = {'lambda_prime': lagrangian_prime, 'alpha': alpha,
            'd_alpha': d_alpha, 'split_residual': residual,
            'split_checked': checked}
    return LepageResult(phi, REDUCED, lagrangian, provenance,
            natural_order=natural)

def lepage_equivalent(lagrangian, kind, reduced=None):
    '''Build the Lepage equivalent of the named kind

    :arg kind: one of :data:`KINDS`
    :kwarg reduced: ``(lambda_prime, alpha)``, required for ``'reduced'``
    :raises ValueError: for an unknown kind or a missing splitting
    '''
    if kind == PRINCIPAL:
        return principal_lepage(lagrangian)
    if kind == FUNDAMENTAL:
        return fundamental_lepage(lagrangian)
    if kind == CANONICAL:
        return canonical_lepage(lagrangian)
    if kind == REDUCED:
        if reduced is None:
            raise ValueError(_('the reduced form needs a splitting'
                " (lambda', alpha)"))
        lagrangian_prime, alpha = reduced
        return reduced_lepage(lagrangian, lagrangian_prime, alpha)
    raise ValueError(_('unknown kind of Lepage equivalent %(kind)r') %
            {'kind': kind})

__all__ = ('CANONICAL', 'CanonicalSplit', 'FUNDAMENTAL', 'KINDS',
        'LepageResult', 'NuCorrection', 'PRINCIPAL', 'REDUCED',
        'canonical_lepage', 'canonical_split', 'first_order_nu',
        'fundamental_lepage', 'horizontal_components', 'lepage_equivalent',
        'principal_lepage', 'reduced_lepage', 'theta_difference')
