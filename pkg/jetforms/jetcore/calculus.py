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
---------------------------
Calculus on jet coordinates
---------------------------

Functions working directly on :mod:`sympy` expressions over a
:class:`~jetforms.jetcore.chart.ChartSpec`.  :class:`~jetforms.jetcore.expr.ScalarExpr`
wraps them; the form layer calls them directly so that coefficients are
canonicalized once per result instead of once per intermediate step.
'''
import sympy as sp

from jetforms import _
from jetforms.jetcore.exceptions import (HomotopyError, NotFiberScalableError,
        ZeroSectionDomainError)

#: The formal parameter of the fibered homotopy ``y -> t y``
HOMOTOPY_PARAMETER = sp.Symbol('_t')

def _has_denominator(expr):
    for node in sp.preorder_traversal(expr):
        if node.is_Pow and node.exp.is_negative:
            return True
    return False

def canonical(chart, expr):
    '''Canonical form of an expression

    Polynomials are fully expanded.  Rational functions become
    ``numerator / denominator`` with both parts expanded, common factors
    cancelled and the denominator's leading coefficient (in the sorted order
    of its symbols) equal to one.  Expressions holding opaque atoms are kept
    as sympy built them; their equality is syntactic only.
    '''
    expr = sp.sympify(expr)
    if expr.is_Number or expr.is_Symbol:
        return expr
    if chart is not None and chart.has_atoms(expr):
        return expr
    if not _has_denominator(expr):
        return sp.expand(expr)
    numerator, denominator = sp.fraction(sp.cancel(sp.together(expr)))
    numerator = sp.expand(numerator)
    denominator = sp.expand(denominator)
    if denominator.is_Number:
        return sp.expand(numerator / denominator)
    gens = sorted(denominator.free_symbols, key=sp.default_sort_key)
    lead = sp.Poly(denominator, *gens).LC()
    numerator = sp.expand(numerator / lead)
    denominator = sp.expand(denominator / lead)
    return sp.Mul(numerator, sp.Pow(denominator, -1))

def is_zero(chart, expr):
    return canonical(chart, expr) == 0

def coordinate_partial(chart, expr, symbol):
    '''Partial derivative with respect to one jet coordinate

    Each sorted multi-index is an independent variable.  Opaque atoms are
    differentiated through their registered rules.

    :raises UnknownCoordinateError: if `symbol` is not a coordinate
    '''
    chart.coordinate(symbol)
    result = sp.diff(expr, symbol)
    for atom in chart.atoms_in(expr):
        rule = chart.atom_derivative(atom, symbol)
        if rule != 0:
            result += sp.diff(expr, atom) * rule
    return result

def jet_gradient(chart, expr):
    '''Map every fiber coordinate `expr` depends on to the partial derivative
    of `expr` with respect to it

    Dependencies through opaque atoms are included.
    '''
    atoms = chart.atoms_in(expr)
    symbols = set(chart.fiber_symbols_in(expr))
    for atom in atoms:
        symbols.update(chart.atom_dependencies(atom))
    atom_partials = dict((atom, sp.diff(expr, atom)) for atom in atoms)
    free = sp.sympify(expr).free_symbols
    gradient = {}
    for symbol in symbols:
        result = sp.diff(expr, symbol) if symbol in free else sp.S.Zero
        for atom, outer in atom_partials.items():
            if outer == 0:
                continue
            rule = chart.atom_derivative(atom, symbol)
            if rule != 0:
                result += outer * rule
        if result != 0:
            gradient[symbol] = result
    return gradient

def total_derivatives(chart, expr, indices=None, gradient=None):
    '''Total derivatives ``d_i expr`` for several base directions at once

    ``d_i e = de/dx^i + sum over (sigma, J) of de/dy^sigma_J y^sigma_{J+i}``

    The jet gradient is computed once and shared between the directions.

    :kwarg indices: base directions, default all of them
    :kwarg gradient: the result of :func:`jet_gradient` when the caller
        already has it
    :returns: list of sympy expressions in the order of `indices`
    :raises OrderOverflowError: if a coordinate of the chart's maximum order
        would have to be differentiated
    '''
    if indices is None:
        indices = range(chart.n)
    if gradient is None:
        gradient = jet_gradient(chart, expr)
    results = []
    for index in indices:
        terms = [sp.diff(expr, chart.base_symbol(index))]
        for symbol, partial in gradient.items():
            coordinate = chart.coordinate(symbol)
            terms.append(partial * chart.fiber_symbol(coordinate.field,
                coordinate.multi.add(index)))
        results.append(sp.Add(*terms))
    return results

def total_derivative(chart, expr, index):
    return total_derivatives(chart, expr, (index,))[0]

def iterated_total_derivative(chart, expr, multi):
    '''``d_J expr`` for a multi-index ``J``'''
    for index in multi:
        if expr == 0:
            break
        expr = canonical(chart, total_derivative(chart, expr, index))
    return expr

def fiber_scale(chart, expr, parameter=HOMOTOPY_PARAMETER):
    '''Substitute ``y^sigma_J -> t y^sigma_J``

    Base coordinates and parameters are untouched; opaque atoms pick up
    ``t`` to their declared scaling degree.

    :raises NotFiberScalableError: if an atom has no scaling degree
    '''
    mapping = {}
    for symbol in chart.fiber_symbols_in(expr):
        mapping[symbol] = parameter * symbol
    for atom in chart.atoms_in(expr):
        opaque, _indices = chart.atom_info(atom)
        degree = opaque.scaling_degree()
        if degree is None:
            raise NotFiberScalableError(_('not fiber-scalable: %(atom)s has'
                ' no declared scaling') % {'atom': atom})
        mapping[atom] = parameter ** degree * atom
    if not mapping:
        return expr
    return expr.xreplace(mapping)

def integrate_unit_interval(expr, parameter=HOMOTOPY_PARAMETER):
    '''Exact integral over ``t`` from 0 to 1 of an expression polynomial in
    ``t``

    :raises HomotopyError: if `expr` is not polynomial in ``t``
    '''
    expr = sp.sympify(expr)
    if not expr.has(parameter):
        return expr
    try:
        poly = sp.Poly(expr, parameter)
    except sp.PolynomialError:
        raise HomotopyError(_('homotopy integrand not polynomial in t'))
    terms = []
    for (power,), coeff in poly.terms():
        terms.append(coeff / (power + 1))
    result = sp.Add(*terms)
    if result.has(parameter):
        raise HomotopyError(_('homotopy integrand not polynomial in t'))
    return result

def zero_section(chart, expr):
    '''Value of `expr` on the zero section: every fiber coordinate set to 0

    :raises ZeroSectionDomainError: if an opaque atom is undefined there
    '''
    mapping = dict((symbol, sp.S.Zero)
            for symbol in chart.fiber_symbols_in(expr))
    for atom in chart.atoms_in(expr):
        opaque, indices = chart.atom_info(atom)
        mapping[atom] = opaque.zero_value(chart, indices)
    if not mapping:
        return expr
    return expr.xreplace(mapping)

__all__ = ('HOMOTOPY_PARAMETER', 'canonical', 'coordinate_partial',
        'fiber_scale', 'integrate_unit_interval',
        'is_zero', 'iterated_total_derivative', 'jet_gradient',
        'total_derivative', 'total_derivatives', 'zero_section')
