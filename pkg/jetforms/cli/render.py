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
---------
Renderers
---------

Text, LaTeX and JSON renderings of forms, source forms, Lagrangians and
verification reports.

The JSON form schema is::

    {"order": s, "degree": k,
     "terms": [{"coeff": "<canonical expression>",
                "factors": ["dx[i]", "w[field;J]", "dy[field;J]"]}]}

with the terms in monomial order, so equal forms serialise to equal text.
:func:`form_from_json` reads it back.

LaTeX uses ``\\omega_0`` for the volume form, ``\\omega_{x}`` and
``\\omega_{x y}`` for its contractions by base directions,
``\\omega^{\\sigma}_{J}`` for contact forms and ``d y_{,J}`` for top order
differentials.  No macro outside plain LaTeX math is needed.
'''
import json

import sympy as sp

from jetforms import _
from jetforms.forms.basis import CONTACT, DX, parse_label
from jetforms.forms.exceptions import FormError
from jetforms.forms.form import DiffForm, omega
from jetforms.jetcore.opaque import InverseMetric
from jetforms.varcalc.lagrangian import Lagrangian, SourceForm

TEXT = 'text'
LATEX = 'latex'
JSON = 'json'

#: Output formats accepted by the renderers
FORMATS = (TEXT, LATEX, JSON)

def dumps(document):
    '''Deterministic JSON text'''
    return json.dumps(document, indent=2, sort_keys=True) + '\n'

#
# JSON
#

def form_to_json(form):
    '''Serialisable dict of a :class:`~jetforms.forms.form.DiffForm`'''
    return {'order': form.order, 'degree': form.degree,
            'terms': [{'coeff': sp.sstr(coeff),
                'factors': [factor.label() for factor in monomial]}
                for monomial, coeff in form.sorted_terms()]}

def form_from_json(chart, document):
    '''Inverse of :func:`form_to_json`

    :raises FormError: if the document does not follow the schema or names
        something the chart does not have
    '''
    try:
        order = int(document['order'])
        degree = int(document['degree'])
        terms = {}
        for term in document['terms']:
            monomial = tuple(parse_label(label, order)
                    for label in term['factors'])
            terms[monomial] = chart.parse_expression(term['coeff'])
    except (KeyError, TypeError, ValueError, sp.SympifyError) as error:
        raise FormError(_('malformed form document: %(error)s') %
                {'error': error})
    return DiffForm(chart, order, degree, terms)

def source_to_json(source):
    return dict((field, sp.sstr(value)) for field, value in source.items())

def lagrangian_to_json(lagrangian):
    return {'order': lagrangian.order, 'density': sp.sstr(lagrangian.expr)}

#
# LaTeX
#

def _latex_head(name):
    head, _sep, rest = name.partition('_')
    text = sp.latex(sp.Symbol(head))
    return text, rest.replace('_', '')

def latex_symbol_names(chart, expr):
    '''``symbol_names`` mapping for :func:`sympy.latex` on a chart'''
    names = {}
    for symbol in expr.free_symbols:
        kind = chart.kind(symbol)
        if kind == 'fiber':
            coordinate = chart.coordinate(symbol)
            names[symbol] = latex_coordinate(coordinate.field,
                    coordinate.multi)
        elif kind == 'atom':
            opaque, indices = chart.atom_info(symbol)
            head = _latex_head(opaque.family)[0]
            if isinstance(opaque, InverseMetric):
                names[symbol] = '%s^{%s}' % (head, ''.join(str(index)
                    for index in indices))
            else:
                names[symbol] = r'\sqrt{\left|\det %s\right|}' % head
    return names

def latex_coordinate(field, multi=()):
    '''``y^sigma_J`` as ``\\phi_{,01}`` or ``A_{2,01}``'''
    head, subscript = _latex_head(field)
    if multi:
        subscript += ',' + ''.join(str(index) for index in multi)
    if subscript:
        return '%s_{%s}' % (head, subscript)
    return head

def latex_expr(chart, expr):
    return sp.latex(expr, symbol_names=latex_symbol_names(chart, expr))

def _latex_factor(chart, factor):
    if factor.kind == CONTACT:
        head, subscript = _latex_head(factor.field)
        text = r'\omega^{%s%s}' % (head, '_{%s}' % subscript if subscript
                else '')
        if factor.multi:
            text += '_{%s}' % ''.join(str(index) for index in factor.multi)
        return text
    return 'd' + latex_coordinate(factor.field, factor.multi)

def _latex_volume(chart, missing):
    if not missing:
        return r'\omega_0'
    return r'\omega_{%s}' % ' '.join(sp.latex(chart.base_symbol(index))
            for index in missing)

def _latex_monomial(chart, monomial):
    '''Sign and LaTeX text of a monomial, fiber factors first'''
    dx_part = [factor.index for factor in monomial if factor.kind == DX]
    fibers = [_latex_factor(chart, factor) for factor in monomial
            if factor.kind != DX]
    if not dx_part:
        return 1, r' \wedge '.join(fibers)
    missing = [index for index in range(chart.n) if index not in dx_part]
    # dx_part = sign w_missing, then move it behind the fiber factors
    sign = list(omega(chart, missing).terms.values())[0]
    if (len(dx_part) * len(fibers)) % 2:
        sign = -sign
    return sign, r' \wedge '.join(fibers + [_latex_volume(chart, missing)])

def latex_form(form):
    if form.is_zero():
        return '0'
    chart = form.chart
    parts = []
    for monomial, coeff in form.sorted_terms():
        sign, text = _latex_monomial(chart, monomial)
        coeff = sign * coeff
        if not text:
            parts.append(latex_expr(chart, coeff))
        elif coeff == 1:
            parts.append(text)
        elif coeff == -1:
            parts.append('-' + text)
        elif coeff.is_Add:
            parts.append(r'\left(%s\right) %s' % (latex_expr(chart, coeff),
                text))
        else:
            parts.append('%s %s' % (latex_expr(chart, coeff), text))
    return ' + '.join(parts).replace('+ -', '- ')

#
# Renderers
#

def _check_format(fmt):
    if fmt not in FORMATS:
        raise ValueError(_('unknown output format %(format)r') %
                {'format': fmt})

def render_form(form, fmt=TEXT, name='form'):
    '''Render a form; `name` is the JSON key and the LaTeX left hand side

    Text output uses the basis labels: ``w[sigma;J]`` is the contact form
    ``omega^sigma_J``, the entries of ``J`` being base indices in the order
    the LaTeX subscript lists them, and ``dy[sigma;J]`` a top order
    differential.
    '''
    _check_format(fmt)
    if fmt == JSON:
        return dumps({name: form_to_json(form)})
    if fmt == LATEX:
        return '%s = %s\n' % (_latex_name(name), latex_form(form))
    return '%s = %s\n' % (name, form)

def render_source(source, fmt=TEXT):
    _check_format(fmt)
    if fmt == JSON:
        return dumps({'source_form': source_to_json(source),
            'order': source.order})
    chart = source.chart
    lines = []
    for field, value in source.items():
        if fmt == LATEX:
            lines.append(r'\mathcal{E}_{%s} = %s' % (latex_coordinate(field),
                latex_expr(chart, value)))
        else:
            lines.append('E[%s] = %s' % (field, sp.sstr(value)))
    separator = ' \\\\\n' if fmt == LATEX else '\n'
    return separator.join(lines) + '\n'

def render_lagrangian(lagrangian, fmt=TEXT, name='lagrangian'):
    _check_format(fmt)
    if fmt == JSON:
        return dumps({name: lagrangian_to_json(lagrangian)})
    if fmt == LATEX:
        return '%s = %s\n' % (_latex_name(name),
                latex_expr(lagrangian.chart, lagrangian.expr))
    return '%s = %s\n' % (name, sp.sstr(lagrangian.expr))

def render_document(sections, fmt=TEXT):
    '''Render several named pieces, a list of ``(name, object)`` pairs of
    forms, Lagrangians, source forms and plain values, as one document'''
    _check_format(fmt)
    if fmt == JSON:
        document = {}
        for name, value in sections:
            if isinstance(value, DiffForm):
                document[name] = form_to_json(value)
            elif isinstance(value, Lagrangian):
                document[name] = lagrangian_to_json(value)
            elif isinstance(value, SourceForm):
                document[name] = source_to_json(value)
            else:
                document[name] = value
        return dumps(document)
    pieces = []
    for name, value in sections:
        if isinstance(value, DiffForm):
            pieces.append(render_form(value, fmt, name))
        elif isinstance(value, Lagrangian):
            pieces.append(render_lagrangian(value, fmt, name))
        elif isinstance(value, SourceForm):
            pieces.append(render_source(value, fmt))
        elif fmt == LATEX:
            pieces.append(r'\text{%s}' % _latex_text('%s: %s' % (name,
                value)) + '\n')
        else:
            pieces.append('%s: %s\n' % (name, value))
    return ''.join(pieces)

def render_report(report, fmt=TEXT, verbose=False):
    '''Render a :class:`~jetforms.geomver.checks.VerificationReport`

    Without `verbose` only the first failure is shown.
    '''
    _check_format(fmt)
    if fmt == JSON:
        return dumps(report.as_dict())
    status = _('passed') if report.passed else _('FAILED')
    lines = [_('%(suite)s: %(status)s (seed %(seed)s, %(trials)s trials,'
        ' max residual %(residual)s)') % {'suite': report.suite,
            'status': status, 'seed': report.seed, 'trials': report.trials,
            'residual': report.max_residual}]
    failures = report.failures if verbose else report.failures[:1]
    lines.extend('  ' + failure for failure in failures)
    if fmt == LATEX:
        return ' \\\\\n'.join(r'\text{%s}' % _latex_text(line)
                for line in lines) + '\n'
    return '\n'.join(lines) + '\n'

_LATEX_NAMES = {'theta': r'\Theta', 'phi': r'\Phi', 'alpha': r'\alpha',
        'd_alpha': r'd\alpha', 'current': 'J', 'lagrangian': r'\mathcal{L}',
        'lambda_vt': r'\mathcal{L}_{VT}', 'form': r'\rho', 'rho': r'\rho',
        'phi_reduced': r'\Phi^{\prime}', 'd_phi': r'd\Phi'}

def _latex_name(name):
    return _LATEX_NAMES.get(name, r'\mathrm{%s}' % _latex_text(name))

_LATEX_ESCAPES = {'\\': r'\textbackslash{}', '~': r'\textasciitilde{}',
        '^': r'\textasciicircum{}', '{': r'\{', '}': r'\}', '_': r'\_',
        '#': r'\#', '$': r'\$', '%': r'\%', '&': r'\&'}

def _latex_text(text):
    return ''.join(_LATEX_ESCAPES.get(char, char) for char in text)

__all__ = ('FORMATS', 'JSON', 'LATEX', 'TEXT', 'dumps', 'form_from_json',
        'form_to_json', 'lagrangian_to_json', 'latex_coordinate',
        'latex_expr', 'latex_form', 'latex_symbol_names', 'render_document',
        'render_form', 'render_lagrangian', 'render_report', 'render_source',
        'source_to_json')
