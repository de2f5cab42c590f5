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
-----------
Elaboration
-----------

Turns a parsed :class:`~jetforms.lagdsl.nodes.ProblemFile` into engine
objects.  Field families become scalar fields (``A[4]`` gives ``A_0`` to
``A_3``; a symmetric ``g[4,4]`` gives ``g_p_q`` for ``p <= q``), sums are
expanded, ``let`` bindings are inlined (each instance computed once) and the
densities are canonicalized by :mod:`jetforms.jetcore`.
'''
import itertools
import logging
import os
from dataclasses import dataclass, field
from typing import Optional

import sympy as sp

from jetforms import _
from jetforms.forms.form import DiffForm, omega
from jetforms.jetcore import calculus
from jetforms.jetcore.chart import ChartSpec
from jetforms.jetcore.exceptions import ChartError
from jetforms.jetcore.opaque import InverseMetric, VolumeFactor, metric_field
from jetforms.lagdsl import nodes
from jetforms.lagdsl.exceptions import (DerivativeOrderError,
        DimensionMismatchError, ElaborationError, IndexRangeError,
        UndeclaredIdentifierError)
from jetforms.lagdsl.parser import parse, parse_expression
from jetforms.varcalc.lagrangian import Lagrangian

log = logging.getLogger(__name__)

#: Directory of the problem files shipped with jetforms
PROBLEM_DIR = os.path.join(os.path.dirname(os.path.dirname(
    os.path.abspath(__file__))), 'problems')

#: Extension of problem files
EXTENSION = '.jf'

@dataclass
class ReducedInputs:
    '''The reduced Lagrangian ``lambda'`` and the form ``alpha`` with
    ``lambda = lambda' + h d alpha``'''
    lagrangian_prime: Lagrangian
    alpha: DiffForm

@dataclass
class Problem:
    '''An elaborated problem file'''
    source: nodes.ProblemFile
    chart: ChartSpec
    lagrangian: Lagrangian
    reduced: Optional[ReducedInputs] = None
    path: Optional[str] = None
    families: dict = field(default_factory=dict)

    def expression(self, text):
        '''Elaborate a single expression in this problem's names'''
        return elaborate_expression(self, text)

def family_field(decl, values):
    '''Name of the scalar field behind ``decl[values]``'''
    if decl.symmetric:
        return metric_field(decl.name, *values)
    return '_'.join([decl.name] + [str(value) for value in values])

def family_fields(decl):
    '''All scalar fields of a declaration, in chart order'''
    if not decl.shape:
        return [decl.name]
    if decl.symmetric:
        size = decl.shape[0]
        return [metric_field(decl.name, p, q) for p in range(size)
                for q in range(p, size)]
    return [family_field(decl, values) for values in
            itertools.product(*[range(size) for size in decl.shape])]

def _error(cls, message, node):
    return cls(message, getattr(node, 'line', None) or None,
            getattr(node, 'column', None) or None)

class _Elaborator(object):
    def __init__(self, problem, chart):
        self.chart = chart
        self.n = chart.n
        self.order = problem.chart.order
        self.base = dict((name, index)
                for index, name in enumerate(problem.chart.base))
        self.families = dict((decl.name, decl)
                for decl in problem.chart.fields)
        self.constants = dict((decl.name, decl.value)
                for decl in problem.constants)
        self.params = frozenset(problem.params)
        self.opaque = dict((opaque.name, opaque)
                for opaque in chart.opaque_symbols)
        self.lets = dict((decl.name, decl) for decl in problem.lets)
        self._instances = {}

    def index(self, index, size, bindings, node):
        if isinstance(index, int):
            if not 0 <= index < size:
                raise _error(IndexRangeError, _('index %(index)s out of range'
                    ' 0..%(last)s') % {'index': index, 'last': size - 1},
                    node)
            return index
        try:
            value, bound_size = bindings[index]
        except KeyError:
            raise _error(UndeclaredIdentifierError, _('unbound index variable'
                ' %(name)r') % {'name': index}, node)
        if bound_size != size:
            raise _error(DimensionMismatchError, _('index %(name)s ranges'
                ' over %(range)s values but the slot has %(size)s') % {
                    'name': index, 'range': bound_size, 'size': size}, node)
        return value

    def indices(self, node, shape, bindings):
        if len(node.indices) != len(shape):
            raise _error(DimensionMismatchError, _('%(name)s takes'
                ' %(expected)s indices, got %(got)s') % {'name': node.name,
                    'expected': len(shape), 'got': len(node.indices)}, node)
        return tuple(self.index(index, size, bindings, node)
                for index, size in zip(node.indices, shape))

    def field_name(self, node, bindings):
        decl = self.families.get(node.name)
        if decl is None:
            raise _error(ElaborationError, _('%(name)s is not a field') %
                    {'name': node.name}, node)
        return family_field(decl, self.indices(node, decl.shape, bindings))

    def evaluate(self, expr, bindings):
        method = getattr(self, '_' + type(expr).__name__.lower())
        return method(expr, bindings)

    def _number(self, expr, bindings):
        return sp.Rational(expr.value)

    def _name(self, expr, bindings):
        name = expr.name
        if name in self.base:
            self.indices(expr, (), bindings)
            return self.chart.base_symbol(self.base[name])
        if name in self.families:
            return self.chart.fiber_symbol(self.field_name(expr, bindings))
        if name in self.constants:
            value = self.constants[name]
            for index in self.indices(expr, nodes.constant_shape(value),
                    bindings):
                value = value[index]
            return value
        if name in self.params:
            self.indices(expr, (), bindings)
            return self.chart.param_symbol(name)
        if name in self.opaque:
            opaque = self.opaque[name]
            if isinstance(opaque, InverseMetric):
                return opaque.atom(*self.indices(expr, (opaque.dim,
                    opaque.dim), bindings))
            self.indices(expr, (), bindings)
            return opaque.symbol
        if name in self.lets:
            return self._instance(expr, bindings)
        raise _error(UndeclaredIdentifierError, _('undeclared identifier'
            ' %(name)r') % {'name': name}, expr)

    def _instance(self, expr, bindings):
        decl = self.lets[expr.name]
        sizes = [binder.size or self.n for binder in decl.params]
        values = self.indices(expr, sizes, bindings)
        key = (decl.name, values)
        if key not in self._instances:
            inner = dict((binder.name, (value, size)) for binder, value, size
                    in zip(decl.params, values, sizes))
            self._instances[key] = self.evaluate(decl.body, inner)
        return self._instances[key]

    def _derivative(self, expr, bindings):
        name = self.field_name(expr.target, bindings)
        multi = [self.index(index, self.n, bindings, expr)
                for index in expr.indices]
        if len(multi) > self.order:
            raise _error(DerivativeOrderError, _('derivative order beyond'
                ' declared max: %(got)s > %(order)s') % {'got': len(multi),
                    'order': self.order}, expr)
        return self.chart.fiber_symbol(name, multi)

    def _sum(self, expr, bindings):
        sizes = [binder.size or self.n for binder in expr.binders]
        terms = []
        for values in itertools.product(*[range(size) for size in sizes]):
            inner = dict(bindings)
            for binder, value, size in zip(expr.binders, values, sizes):
                inner[binder.name] = (value, size)
            terms.append(self.evaluate(expr.body, inner))
        return sp.Add(*terms)

    def _neg(self, expr, bindings):
        return -self.evaluate(expr.operand, bindings)

    def _binop(self, expr, bindings):
        left = self.evaluate(expr.left, bindings)
        right = self.evaluate(expr.right, bindings)
        if expr.op == '+':
            return left + right
        if expr.op == '-':
            return left - right
        if expr.op == '*':
            return left * right
        if calculus.is_zero(self.chart, right):
            raise _error(ElaborationError, _('division by zero'), expr)
        return left / right

    def _power(self, expr, bindings):
        base = self.evaluate(expr.base, bindings)
        if expr.exponent < 0 and calculus.is_zero(self.chart, base):
            raise _error(ElaborationError, _('division by zero'), expr)
        return base ** expr.exponent

def build_chart(problem, max_order=None):
    '''The :class:`~jetforms.jetcore.chart.ChartSpec` a problem declares

    :raises ElaborationError: if the expanded names clash
    '''
    decl = problem.chart
    fields = []
    for family in decl.fields:
        fields.extend(family_fields(family))
    inverses = {}
    opaque = []
    for entry in problem.opaque:
        size = [family for family in decl.fields
                if family.name == entry.family][0].shape[0]
        if entry.kind == 'inverse':
            symbol = InverseMetric(entry.name, entry.family, size)
            inverses[entry.family] = symbol
        else:
            symbol = VolumeFactor(entry.name, entry.family, size,
                    inverses[entry.family])
        opaque.append(symbol)
    try:
        return ChartSpec(decl.base, fields, problem.params, opaque,
                max_order=max_order)
    except ChartError as error:
        raise ElaborationError(str(error), decl.line or None,
                decl.column or None)

def elaborate(problem, max_order=None, path=None):
    '''Build the chart, the Lagrangian and the optional reduced inputs

    :arg problem: a parsed :class:`~jetforms.lagdsl.nodes.ProblemFile`
    :kwarg max_order: maximum jet order of the chart, see
        :func:`jetforms.settings.max_order`
    :kwarg path: file the problem was read from, kept for messages
    :returns: a :class:`Problem`
    :raises ElaborationError: on a dimension mismatch or other
        inconsistency (one of its subclasses)
    '''
    chart = build_chart(problem, max_order)
    elaborator = _Elaborator(problem, chart)
    density = elaborator.evaluate(problem.lagrangian, {})
    lagrangian = Lagrangian(chart, density, order=problem.chart.order)
    reduced = None
    if problem.reduced is not None:
        decl = problem.reduced
        prime = Lagrangian(chart, elaborator.evaluate(decl.lagrangian, {}))
        components = [calculus.canonical(chart, elaborator.evaluate(
            decl.alpha, {decl.index.name: (i, chart.n)}))
            for i in range(chart.n)]
        order = max(chart.jet_order(component) for component in components)
        alpha = DiffForm.zero(chart, order, chart.n - 1)
        for i, component in enumerate(components):
            alpha = alpha + omega(chart, (i,), order) * component
        reduced = ReducedInputs(prime, alpha)
    families = dict((decl.name, decl) for decl in problem.chart.fields)
    log.debug('elaborated %s: n = %s, %s fields, order %s', path or
            '<text>', chart.n, chart.m, lagrangian.order)
    return Problem(problem, chart, lagrangian, reduced, path, families)

def elaborate_expression(problem, text):
    '''Parse and elaborate one expression against an elaborated problem

    :returns: the canonical :mod:`sympy` expression
    '''
    expr = parse_expression(text, problem.source)
    elaborator = _Elaborator(problem.source, problem.chart)
    return calculus.canonical(problem.chart, elaborator.evaluate(expr, {}))

def load_problem(path, max_order=None):
    '''Read, parse and elaborate a problem file

    :raises IOError: if the file cannot be read
    :raises LagdslError: if it does not parse or elaborate
    '''
    with open(path, 'rb') as source:
        data = source.read()
    return elaborate(parse(data), max_order=max_order, path=path)

def shipped_problems():
    '''Names of the problem files shipped with jetforms'''
    return sorted(name[:-len(EXTENSION)] for name in os.listdir(PROBLEM_DIR)
            if name.endswith(EXTENSION))

def shipped_problem(name, max_order=None):
    '''Load one of the shipped problems by name, ``'kg'`` for instance

    :raises ValueError: if there is no such problem
    '''
    if name.endswith(EXTENSION):
        name = name[:-len(EXTENSION)]
    if name not in shipped_problems():
        raise ValueError(_('no shipped problem %(name)r; available:'
            ' %(names)s') % {'name': name,
                'names': ', '.join(shipped_problems())})
    return load_problem(os.path.join(PROBLEM_DIR, name + EXTENSION),
            max_order=max_order)

__all__ = ('EXTENSION', 'PROBLEM_DIR', 'Problem', 'ReducedInputs',
        'build_chart', 'elaborate', 'elaborate_expression', 'family_field',
        'family_fields', 'load_problem', 'shipped_problem',
        'shipped_problems')
