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
-----------------
Lepage conditions
-----------------

An n-form ``theta`` is a Lepage equivalent of ``lambda`` when

1. ``h theta = lambda`` and
2. ``p_1 d theta`` is a source form, that is, only ``w^sigma ^ w_0`` terms
   survive in it.

:func:`verify_lepage_conditions` reports on both and compares the source
form it extracts with the Euler-Lagrange form of ``lambda``.
'''
from dataclasses import dataclass

import sympy as sp

from jetforms import _
from jetforms.forms.basis import CONTACT, DX
from jetforms.forms.exceptions import FormError
from jetforms.forms.form import DiffForm
from jetforms.varcalc.euler import euler_lagrange
from jetforms.varcalc.lagrangian import SourceForm
from jetforms.varcalc.lepage import LepageResult

@dataclass
class LepageReport:
    '''Outcome of :func:`verify_lepage_conditions`

    :attr:`horizontal_residual` is ``h theta - lambda``;
    :attr:`higher_terms` collects the terms of ``p_1 d theta`` that are not
    of the form ``w^sigma ^ w_0``; :attr:`source_residual` is the extracted
    source form minus the Euler-Lagrange form.
    '''
    horizontal_residual: DiffForm
    higher_terms: DiffForm
    extracted: SourceForm
    euler_lagrange: SourceForm
    source_residual: SourceForm

    @property
    def passed(self):
        return self.horizontal_residual.is_zero() and \
                self.higher_terms.is_zero() and self.source_residual.is_zero()

    def first_failure(self):
        '''Human readable description of the first failed check, or
        :data:`None`'''
        if not self.horizontal_residual.is_zero():
            monomial, coeff = self.horizontal_residual.sorted_terms()[0]
            return _('h(theta) - lambda is not zero: %(coeff)s at'
                ' %(monomial)s') % {'coeff': sp.sstr(coeff),
                    'monomial': ' ^ '.join(f.label() for f in monomial)}
        if not self.higher_terms.is_zero():
            monomial, coeff = self.higher_terms.sorted_terms()[0]
            return _('p1 d(theta) is not a source form: %(coeff)s at'
                ' %(monomial)s') % {'coeff': sp.sstr(coeff),
                    'monomial': ' ^ '.join(f.label() for f in monomial)}
        for field, value in self.source_residual.items():
            if value != 0:
                return _('extracted source form differs from the'
                    ' Euler-Lagrange form for %(field)s by %(value)s') % {
                        'field': field, 'value': sp.sstr(value)}
        return None

    def residual_forms(self):
        '''The three residuals as ``(name, DiffForm)`` pairs'''
        return [('horizontal', self.horizontal_residual),
                ('higher', self.higher_terms),
                ('source', self.source_residual.form())]

def verify_lepage_conditions(theta, lagrangian):
    '''Check the two Lepage conditions for ``theta``

    :arg theta: a :class:`~jetforms.forms.form.DiffForm` or
        :class:`~jetforms.varcalc.lepage.LepageResult`
    :arg lagrangian: the :class:`~jetforms.varcalc.lagrangian.Lagrangian`
    :returns: a :class:`LepageReport`; failures are reported, not raised
    :raises FormError: if ``theta`` is not an n-form on the Lagrangian's
        chart
    '''
    if isinstance(theta, LepageResult):
        theta = theta.form
    chart = lagrangian.chart
    if theta.chart != chart:
        raise FormError(_('form and Lagrangian live on different charts'))
    if theta.degree != chart.n:
        raise FormError(_('a Lepage equivalent is an n-form, got degree'
            ' %(degree)s') % {'degree': theta.degree})
    horizontal_residual = theta.horizontal() - lagrangian.form()
    one_contact = theta.exterior_derivative().contact_component(1)
    sign = -1 if chart.n % 2 else 1
    source = dict((field, []) for field in chart.fields)
    higher = {}
    for monomial, coeff in one_contact.terms.items():
        last = monomial[-1]
        if all(factor.kind == DX for factor in monomial[:-1]) and \
                last.kind == CONTACT and not last.multi:
            source[last.field].append(sign * coeff)
        else:
            higher[monomial] = coeff
    extracted = SourceForm(chart, dict((field, sp.Add(*parts))
        for field, parts in source.items()))
    higher_terms = DiffForm(chart, one_contact.order, chart.n + 1, higher,
            canonicalize=False)
    reference = euler_lagrange(lagrangian)
    return LepageReport(horizontal_residual, higher_terms, extracted,
            reference, extracted - reference)

__all__ = ('LepageReport', 'verify_lepage_conditions')
