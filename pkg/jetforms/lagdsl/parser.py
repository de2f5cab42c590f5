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
------
Parser
------

Recursive descent parser for problem files::

    file       := block+
    block      := 'chart' '{' chart_item+ '}'
                | 'constants' '{' (IDENT '=' value ';')* '}'
                | 'params' '{' (IDENT (',' IDENT)* ';')* '}'
                | 'opaque' '{' (IDENT '=' ('inverse' | 'sqrtabsdet')
                               '(' IDENT ')' ';')* '}'
                | 'let' '{' (IDENT ['[' binder (',' binder)* ']']
                               ':=' expr ';')* '}'
                | 'lagrangian' '{' expr [';'] '}'
                | 'reduced' '{' 'lagrangian' '{' expr [';'] '}'
                               'alpha' '[' binder ']' ':=' expr ';' '}'
    chart_item := 'base' IDENT (',' IDENT)* ';'
                | 'fields' field (',' field)* ';'
                | 'order' INT ';'
    field      := IDENT ['[' INT (',' INT)* ']' ['symmetric']]
    value      := 'diag' '(' scalar (',' scalar)* ')'
                | '[' value (',' value)* ']' | scalar
    scalar     := ['-'] NUMBER ['/' NUMBER]
    expr       := term (('+' | '-') term)*
    term       := unary (('*' | '/') unary)*
    unary      := '-' unary | power
    power      := atom ['^' ['-'] INT]
    atom       := NUMBER | '(' expr ')'
                | 'D' '(' ref ',' index (',' index)* ')'
                | 'sum' '(' binder (',' binder)* ')' '{' expr '}'
                | ref
    ref        := IDENT ['[' index (',' index)* ']']
    binder     := IDENT [':' INT]
    index      := INT | IDENT

The chart block comes first and every name is declared before it is used,
so the parser checks names, literal indices, index ranges and derivative
orders as it goes.  A binder without a size ranges over the base.

:func:`format_problem` prints a :class:`~jetforms.lagdsl.nodes.ProblemFile`
back in this syntax; reparsing the output gives an equal tree.
'''
import sympy as sp

from jetforms import _
from jetforms.lagdsl import nodes
from jetforms.lagdsl.exceptions import (DerivativeOrderError,
        DimensionMismatchError, ElaborationError, IndexRangeError,
        ParseError, UndeclaredIdentifierError)
from jetforms.lagdsl.lexer import EOF_KIND, IDENT, NUMBER, PUNCT, tokenize

#: Deepest nesting of parentheses, unary signs and brackets accepted
MAX_DEPTH = 100

BLOCKS = ('chart', 'constants', 'params', 'opaque', 'let', 'lagrangian',
        'reduced')
OPAQUE_KINDS = ('inverse', 'sqrtabsdet')
KEYWORDS = frozenset(BLOCKS + OPAQUE_KINDS + ('base', 'fields', 'order',
    'symmetric', 'alpha', 'sum', 'D', 'diag'))

# Kinds of declared names
_BASE = 'base'
_FIELD = 'field'
_FAMILY = 'family'
_CONSTANT = 'constant'
_PARAM = 'param'
_OPAQUE = 'opaque'
_LET = 'let'

class _SymbolTable(object):
    '''Names declared so far with their kind and index shape'''
    def __init__(self):
        self.n = None
        self.order = None
        self.kinds = {}
        self.shapes = {}
        self.families = {}
        self.inverses = set()

    def declare(self, name, kind, shape=()):
        self.kinds[name] = kind
        self.shapes[name] = tuple(shape)

    def load(self, problem):
        chart = problem.chart
        self.n = len(chart.base)
        self.order = chart.order
        for name in chart.base:
            self.declare(name, _BASE)
        for decl in chart.fields:
            self.declare(decl.name, _FAMILY if decl.shape else _FIELD,
                    decl.shape)
            self.families[decl.name] = decl
        for decl in problem.constants:
            self.declare(decl.name, _CONSTANT, decl.shape)
        for name in problem.params:
            self.declare(name, _PARAM)
        for decl in problem.opaque:
            self.declare_opaque(decl)
        for decl in problem.lets:
            self.declare(decl.name, _LET, [binder.size or self.n
                for binder in decl.params])

    def declare_opaque(self, decl):
        if decl.kind == 'inverse':
            size = self.families[decl.family].shape[0]
            self.declare(decl.name, _OPAQUE, (size, size))
            self.inverses.add(decl.family)
        else:
            self.declare(decl.name, _OPAQUE)

class Parser(object):
    '''Parse one problem file or expression

    :arg text: the source text; :class:`bytes` are decoded as UTF-8
    :kwarg context: a :class:`~jetforms.lagdsl.nodes.ProblemFile` whose
        declarations are visible, for :func:`parse_expression`
    '''
    def __init__(self, text, context=None):
        if isinstance(text, bytes):
            text = _decode(text)
        self.tokens = tokenize(text)
        self.position = 0
        self.depth = 0
        self.scopes = []
        self.table = _SymbolTable()
        if context is not None:
            self.table.load(context)

    #
    # Token helpers
    #

    def peek(self):
        return self.tokens[self.position]

    def advance(self):
        token = self.tokens[self.position]
        if token.kind != EOF_KIND:
            self.position += 1
        return token

    def at(self, *texts):
        token = self.peek()
        return token.kind in (PUNCT, IDENT) and token.text in texts

    def error(self, expected, message=None, token=None):
        token = token or self.peek()
        expected = tuple(expected)
        if message is None:
            message = _('expected %(expected)s but found %(found)s') % {
                    'expected': ' or '.join(repr(text) if text not in
                        (NUMBER, IDENT) else text for text in expected),
                    'found': token.describe()}
        return ParseError(message, token.line, token.column, expected)

    def expect(self, *texts):
        if not self.at(*texts):
            raise self.error(texts)
        return self.advance()

    def expect_ident(self):
        if self.peek().kind != IDENT:
            raise self.error((IDENT,))
        return self.advance()

    def expect_int(self):
        token = self.peek()
        if token.kind != NUMBER or '.' in token.text:
            raise self.error((NUMBER,), _('expected an integer but found'
                ' %(found)s') % {'found': token.describe()})
        self.advance()
        return int(token.text)

    def _enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise self.error((), _('nesting deeper than %(depth)s levels') %
                    {'depth': MAX_DEPTH})

    def _leave(self):
        self.depth -= 1

    #
    # Declarations
    #

    def _new_name(self, token):
        name = token.text
        if name in KEYWORDS:
            raise self.error((IDENT,), _('%(name)r is a keyword') %
                    {'name': name}, token)
        if '__' in name:
            raise self.error((IDENT,), _('%(name)r: double underscores are'
                ' reserved for jet coordinates') % {'name': name}, token)
        if name in self.table.kinds:
            raise self.error((), _('%(name)r is declared twice') %
                    {'name': name}, token)
        return name

    def parse_file(self):
        '''Parse a complete problem file

        :raises ParseError: on a syntax error
        :raises ElaborationError: on a declaration or use that does not fit
            the declared names (one of its subclasses)
        '''
        chart = None
        constants = []
        params = []
        opaque = []
        lets = []
        lagrangian = None
        reduced = None
        seen = set()
        if self.peek().kind == EOF_KIND:
            raise self.error(('chart',))
        while self.peek().kind != EOF_KIND:
            token = self.peek()
            if token.kind != IDENT or token.text not in BLOCKS:
                raise self.error(BLOCKS if seen else ('chart',))
            if not seen and token.text != 'chart':
                raise self.error(('chart',), _('the chart block must come'
                    ' first'))
            if token.text in seen and token.text in ('chart', 'lagrangian',
                    'reduced'):
                raise self.error((), _('duplicate %(block)s block') %
                        {'block': token.text})
            seen.add(token.text)
            self.advance()
            self.expect('{')
            if token.text == 'chart':
                chart = self._chart_block(token)
            elif token.text == 'constants':
                constants.extend(self._constants_block())
            elif token.text == 'params':
                params.extend(self._params_block())
            elif token.text == 'opaque':
                opaque.extend(self._opaque_block())
            elif token.text == 'let':
                lets.extend(self._let_block())
            elif token.text == 'lagrangian':
                lagrangian = self._expression_block()
            else:
                reduced = self._reduced_block(token)
            self.expect('}')
        if lagrangian is None:
            raise self.error(('lagrangian',), _('missing lagrangian block'))
        return nodes.ProblemFile(chart, tuple(constants), tuple(params),
                tuple(opaque), tuple(lets), lagrangian, reduced)

    def _chart_block(self, start):
        base = fields = order = None
        while not self.at('}'):
            item = self.expect('base', 'fields', 'order')
            if {'base': base, 'fields': fields, 'order': order}[item.text] \
                    is not None:
                raise self.error((), _('duplicate %(item)s declaration') %
                        {'item': item.text}, item)
            if item.text == 'base':
                base = [self._new_name(self.expect_ident())]
                while self.at(','):
                    self.advance()
                    base.append(self._new_name(self.expect_ident()))
                if len(set(base)) != len(base):
                    raise self.error((), _('base coordinates repeat'), item)
                for name in base:
                    self.table.declare(name, _BASE)
                self.table.n = len(base)
            elif item.text == 'fields':
                fields = [self._field_decl()]
                while self.at(','):
                    self.advance()
                    fields.append(self._field_decl())
            else:
                order = self.expect_int()
                self.table.order = order
            self.expect(';')
        for item, value in (('base', base), ('fields', fields),
                ('order', order)):
            if value is None:
                raise self.error((item,), _('the chart block lacks'
                    ' %(item)s') % {'item': item})
        return nodes.ChartDecl(tuple(base), tuple(fields), order, start.line,
                start.column)

    def _field_decl(self):
        token = self.expect_ident()
        name = self._new_name(token)
        shape = ()
        symmetric = False
        if self.at('['):
            self.advance()
            shape = [self.expect_int()]
            while self.at(','):
                self.advance()
                shape.append(self.expect_int())
            self.expect(']')
            if 0 in shape:
                raise DimensionMismatchError(_('family %(name)s has an empty'
                    ' dimension') % {'name': name}, token.line, token.column)
            if self.at('symmetric'):
                self.advance()
                symmetric = True
                if len(shape) != 2 or shape[0] != shape[1]:
                    raise DimensionMismatchError(_('a symmetric family needs'
                        ' a square shape, %(name)s has %(shape)s') %
                        {'name': name, 'shape': shape}, token.line,
                        token.column)
        decl = nodes.FieldDecl(name, tuple(shape), symmetric, token.line,
                token.column)
        self.table.declare(name, _FAMILY if shape else _FIELD, shape)
        self.table.families[name] = decl
        return decl

    def _constants_block(self):
        decls = []
        while not self.at('}'):
            token = self.expect_ident()
            name = self._new_name(token)
            self.expect('=')
            value = self._value()
            self.expect(';')
            decl = nodes.ConstantDecl(name, value, token.line, token.column)
            self.table.declare(name, _CONSTANT, decl.shape)
            decls.append(decl)
        return decls

    def _value(self):
        self._enter()
        try:
            if self.at('diag'):
                self.advance()
                self.expect('(')
                entries = [self._scalar()]
                while self.at(','):
                    self.advance()
                    entries.append(self._scalar())
                self.expect(')')
                size = len(entries)
                return tuple(tuple(entries[row] if row == column
                    else sp.S.Zero for column in range(size))
                    for row in range(size))
            if self.at('['):
                start = self.advance()
                entries = [self._value()]
                while self.at(','):
                    self.advance()
                    entries.append(self._value())
                self.expect(']')
                shapes = set(nodes.constant_shape(entry) for entry in entries)
                if len(shapes) != 1:
                    raise DimensionMismatchError(_('ragged constant tensor'),
                            start.line, start.column)
                return tuple(entries)
            return self._scalar()
        finally:
            self._leave()

    def _scalar(self):
        negative = False
        if self.at('-'):
            self.advance()
            negative = True
        token = self.peek()
        if token.kind != NUMBER:
            raise self.error(('-', NUMBER, '[', 'diag'))
        self.advance()
        value = sp.Rational(token.text)
        if self.at('/'):
            self.advance()
            denominator_token = self.peek()
            denominator = self.expect_int()
            if denominator == 0:
                raise self.error((), _('division by zero'), denominator_token)
            value = value / denominator
        return -value if negative else value

    def _params_block(self):
        names = []
        while not self.at('}'):
            token = self.expect_ident()
            names.append(self._new_name(token))
            self.table.declare(token.text, _PARAM)
            while self.at(','):
                self.advance()
                token = self.expect_ident()
                names.append(self._new_name(token))
                self.table.declare(token.text, _PARAM)
            self.expect(';')
        return names

    def _opaque_block(self):
        decls = []
        while not self.at('}'):
            token = self.expect_ident()
            name = self._new_name(token)
            self.expect('=')
            kind = self.expect(*OPAQUE_KINDS).text
            self.expect('(')
            family_token = self.expect_ident()
            family = family_token.text
            self.expect(')')
            self.expect(';')
            decl = self.table.families.get(family)
            if decl is None:
                raise UndeclaredIdentifierError(_('undeclared field family'
                    ' %(name)r') % {'name': family}, family_token.line,
                    family_token.column)
            if not decl.symmetric:
                raise DimensionMismatchError(_('%(kind)s needs a symmetric'
                    ' rank 2 family, %(name)s is not') % {'kind': kind,
                        'name': family}, family_token.line,
                    family_token.column)
            if kind == 'sqrtabsdet' and family not in self.table.inverses:
                raise ElaborationError(_('sqrtabsdet(%(name)s) needs'
                    ' inverse(%(name)s) to be declared first') %
                    {'name': family}, family_token.line, family_token.column)
            opaque = nodes.OpaqueDecl(name, kind, family, token.line,
                    token.column)
            self.table.declare_opaque(opaque)
            decls.append(opaque)
        return decls

    def _let_block(self):
        decls = []
        while not self.at('}'):
            token = self.expect_ident()
            name = self._new_name(token)
            params = ()
            if self.at('['):
                self.advance()
                params = [self._binder(())]
                while self.at(','):
                    self.advance()
                    params.append(self._binder(params))
                self.expect(']')
            self.expect(':=')
            self.scopes.append(dict((binder.name, binder)
                for binder in params))
            try:
                body = self.parse_expression()
            finally:
                self.scopes.pop()
            self.expect(';')
            self.table.declare(name, _LET, [binder.size or self.table.n
                for binder in params])
            decls.append(nodes.LetDecl(name, tuple(params), body, token.line,
                token.column))
        return decls

    def _expression_block(self):
        expr = self.parse_expression()
        if self.at(';'):
            self.advance()
        return expr

    def _reduced_block(self, start):
        self.expect('lagrangian')
        self.expect('{')
        lagrangian = self._expression_block()
        self.expect('}')
        self.expect('alpha')
        self.expect('[')
        index = self._binder(())
        self.expect(']')
        if index.size not in (None, self.table.n):
            raise DimensionMismatchError(_('alpha is indexed by the base'),
                    index.line, index.column)
        self.expect(':=')
        self.scopes.append({index.name: index})
        try:
            alpha = self.parse_expression()
        finally:
            self.scopes.pop()
        self.expect(';')
        return nodes.ReducedDecl(lagrangian, index, alpha, start.line,
                start.column)

    #
    # Expressions
    #

    def parse_expression(self):
        '''``expr := term (('+' | '-') term)*``'''
        left = self._term()
        while self.at('+', '-'):
            token = self.advance()
            right = self._term()
            left = nodes.BinOp(token.text, left, right, token.line,
                    token.column)
        return left

    def _term(self):
        left = self._unary()
        while self.at('*', '/'):
            token = self.advance()
            right = self._unary()
            left = nodes.BinOp(token.text, left, right, token.line,
                    token.column)
        return left

    def _unary(self):
        self._enter()
        try:
            if self.at('-'):
                token = self.advance()
                return nodes.Neg(self._unary(), token.line, token.column)
            return self._power()
        finally:
            self._leave()

    def _power(self):
        base = self._atom()
        if not self.at('^'):
            return base
        token = self.advance()
        sign = 1
        if self.at('-'):
            self.advance()
            sign = -1
        return nodes.Power(base, sign * self.expect_int(), token.line,
                token.column)

    def _atom(self):
        token = self.peek()
        if token.kind == NUMBER:
            self.advance()
            return nodes.Number(sp.Rational(token.text), token.line,
                    token.column)
        if self.at('('):
            self.advance()
            expr = self.parse_expression()
            self.expect(')')
            return expr
        if token.kind == IDENT and token.text == 'D':
            return self._derivative()
        if token.kind == IDENT and token.text == 'sum':
            return self._sum()
        if token.kind == IDENT and token.text not in KEYWORDS:
            return self._reference()
        raise self.error((NUMBER, IDENT, '(', '-', 'D', 'sum'))

    def _binder(self, siblings):
        token = self.expect_ident()
        name = token.text
        if name in KEYWORDS or name in self.table.kinds:
            raise self.error((IDENT,), _('index variable %(name)r clashes'
                ' with a declared name') % {'name': name}, token)
        if self._bound(name) is not None or any(binder.name == name
                for binder in siblings):
            raise self.error((IDENT,), _('index variable %(name)r is already'
                ' bound') % {'name': name}, token)
        size = None
        if self.at(':'):
            self.advance()
            size_token = self.peek()
            size = self.expect_int()
            if size < 1:
                raise self.error((), _('an index range must not be empty'),
                        size_token)
        return nodes.Binder(name, size, token.line, token.column)

    def _bound(self, name):
        for scope in reversed(self.scopes):
            if name in scope:
                return scope[name]
        return None

    def _index(self):
        token = self.peek()
        if token.kind == IDENT:
            self.advance()
            if self._bound(token.text) is None:
                raise UndeclaredIdentifierError(_('unbound index variable'
                    ' %(name)r') % {'name': token.text}, token.line,
                    token.column)
            return token.text, token
        return self.expect_int(), token

    def _index_list(self):
        indices = [self._index()]
        while self.at(','):
            self.advance()
            indices.append(self._index())
        return indices

    def _check_slot(self, index, size):
        value, position = index
        if isinstance(value, int):
            if value >= size:
                raise IndexRangeError(_('index %(index)s out of range'
                    ' 0..%(last)s') % {'index': value, 'last': size - 1},
                    position.line, position.column)
            return
        binder = self._bound(value)
        if (binder.size or self.table.n) != size:
            raise DimensionMismatchError(_('index %(name)s ranges over'
                ' %(range)s values but the slot has %(size)s') % {
                    'name': value, 'range': binder.size or self.table.n,
                    'size': size}, position.line, position.column)

    def _reference(self):
        token = self.advance()
        name = token.text
        if self._bound(name) is not None:
            raise self.error((), _('index variable %(name)r used as a value')
                    % {'name': name}, token)
        if name not in self.table.kinds:
            raise UndeclaredIdentifierError(_('undeclared identifier'
                ' %(name)r') % {'name': name}, token.line, token.column)
        indices = []
        if self.at('['):
            self.advance()
            indices = self._index_list()
            self.expect(']')
        shape = self.table.shapes[name]
        if len(indices) != len(shape):
            raise DimensionMismatchError(_('%(name)s takes %(expected)s'
                ' indices, got %(got)s') % {'name': name,
                    'expected': len(shape), 'got': len(indices)}, token.line,
                token.column)
        for index, size in zip(indices, shape):
            self._check_slot(index, size)
        return nodes.Name(name, tuple(value for value, _token in indices),
                token.line, token.column)

    def _derivative(self):
        start = self.advance()
        self.expect('(')
        token = self.peek()
        target = self._reference() if token.kind == IDENT else None
        if target is None or self.table.kinds[target.name] not in (_FIELD,
                _FAMILY):
            raise self.error((IDENT,), _('D() differentiates a field'), token)
        self.expect(',')
        indices = self._index_list()
        self.expect(')')
        for index in indices:
            self._check_slot(index, self.table.n)
        if len(indices) > self.table.order:
            raise DerivativeOrderError(_('derivative order beyond declared'
                ' max: %(got)s > %(order)s') % {'got': len(indices),
                    'order': self.table.order}, start.line, start.column)
        return nodes.Derivative(target, tuple(value
            for value, _token in indices), start.line, start.column)

    def _sum(self):
        start = self.advance()
        self.expect('(')
        binders = [self._binder(())]
        while self.at(','):
            self.advance()
            binders.append(self._binder(binders))
        self.expect(')')
        self.expect('{')
        self.scopes.append(dict((binder.name, binder) for binder in binders))
        try:
            body = self.parse_expression()
        finally:
            self.scopes.pop()
        self.expect('}')
        return nodes.Sum(tuple(binders), body, start.line, start.column)

def _decode(data):
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as error:
        prefix = data[:error.start]
        line = prefix.count(b'\n') + 1
        column = error.start - (prefix.rfind(b'\n') + 1) + 1
        raise ParseError(_('input is not valid UTF-8'), line, column)

def parse(text):
    '''Parse a problem file

    :arg text: source text, :class:`str` or UTF-8 :class:`bytes`
    :returns: a :class:`~jetforms.lagdsl.nodes.ProblemFile`
    :raises ParseError: on a syntax error, with position and the set of
        expected tokens
    :raises ElaborationError: (a subclass) for an undeclared identifier, an
        index out of range, a derivative beyond the declared order or
        mismatched index ranges
    '''
    return Parser(text).parse_file()

def parse_expression(text, problem=None):
    '''Parse a single expression

    :kwarg problem: a :class:`~jetforms.lagdsl.nodes.ProblemFile` whose
        names the expression may use
    '''
    parser = Parser(text, problem)
    expr = parser.parse_expression()
    if parser.peek().kind != EOF_KIND:
        raise parser.error(('+', '-', '*', '/', '^'))
    return expr

#
# Pretty printing
#

_ADD = 1
_MUL = 2
_UNARY = 3
_POWER = 4
_ATOM = 5

def _format_number(value):
    value = sp.Rational(value)
    if value < 0:
        return '(-%s)' % _format_number(-value)
    if value.q == 1:
        return str(value.p)
    denominator = value.q
    for prime in (2, 5):
        while denominator % prime == 0:
            denominator //= prime
    if denominator != 1:
        return '(%s/%s)' % (value.p, value.q)
    places = 0
    while (value * 10 ** places).q != 1:
        places += 1
    digits = str((value * 10 ** places).p).rjust(places + 1, '0')
    return '%s.%s' % (digits[:-places], digits[-places:])

def _format_scalar(value):
    value = sp.Rational(value)
    if value.q == 1:
        return str(value.p)
    return '%s/%s' % (value.p, value.q)

def _format_value(value):
    if isinstance(value, tuple):
        return '[%s]' % ', '.join(_format_value(entry) for entry in value)
    return _format_scalar(value)

def _format_binder(binder):
    if binder.size is None:
        return binder.name
    return '%s:%s' % (binder.name, binder.size)

def _format_indices(indices):
    return ', '.join(str(index) for index in indices)

def _format(expr):
    if isinstance(expr, nodes.Number):
        text = _format_number(expr.value)
        return text, _ATOM
    if isinstance(expr, nodes.Name):
        if expr.indices:
            return '%s[%s]' % (expr.name, _format_indices(expr.indices)), \
                    _ATOM
        return expr.name, _ATOM
    if isinstance(expr, nodes.Derivative):
        return 'D(%s, %s)' % (format_expression(expr.target),
                _format_indices(expr.indices)), _ATOM
    if isinstance(expr, nodes.Sum):
        return 'sum(%s){ %s }' % (', '.join(_format_binder(binder)
            for binder in expr.binders), format_expression(expr.body)), _ATOM
    if isinstance(expr, nodes.Power):
        return '%s^%s' % (_wrapped(expr.base, _ATOM), expr.exponent), _POWER
    if isinstance(expr, nodes.Neg):
        return '-%s' % _wrapped(expr.operand, _UNARY), _UNARY
    if isinstance(expr, nodes.BinOp):
        if expr.op in '+-':
            return '%s %s %s' % (_wrapped(expr.left, _ADD), expr.op,
                    _wrapped(expr.right, _MUL)), _ADD
        return '%s%s%s' % (_wrapped(expr.left, _MUL), expr.op,
                _wrapped(expr.right, _UNARY)), _MUL
    raise TypeError(_('not an expression node: %(node)r') % {'node': expr})

def _wrapped(expr, level):
    text, own = _format(expr)
    if own < level:
        return '(%s)' % text
    return text

def format_expression(expr):
    '''Source text of an expression tree'''
    return _format(expr)[0]

def format_problem(problem, indent='    '):
    '''Pretty print a problem file

    ``parse(format_problem(p)) == p`` for every tree :func:`parse` returns.
    '''
    chart = problem.chart
    fields = []
    for decl in chart.fields:
        text = decl.name
        if decl.shape:
            text += '[%s]' % _format_indices(decl.shape)
            if decl.symmetric:
                text += ' symmetric'
        fields.append(text)
    lines = ['chart {',
            '%sbase %s;' % (indent, ', '.join(chart.base)),
            '%sfields %s;' % (indent, ', '.join(fields)),
            '%sorder %s;' % (indent, chart.order), '}']
    if problem.constants:
        lines.append('constants {')
        lines.extend('%s%s = %s;' % (indent, decl.name,
            _format_value(decl.value)) for decl in problem.constants)
        lines.append('}')
    if problem.params:
        lines.extend(['params {', '%s%s;' % (indent,
            ', '.join(problem.params)), '}'])
    if problem.opaque:
        lines.append('opaque {')
        lines.extend('%s%s = %s(%s);' % (indent, decl.name, decl.kind,
            decl.family) for decl in problem.opaque)
        lines.append('}')
    if problem.lets:
        lines.append('let {')
        for decl in problem.lets:
            header = decl.name
            if decl.params:
                header += '[%s]' % ', '.join(_format_binder(binder)
                        for binder in decl.params)
            lines.append('%s%s := %s;' % (indent, header,
                format_expression(decl.body)))
        lines.append('}')
    lines.extend(['lagrangian {', '%s%s;' % (indent,
        format_expression(problem.lagrangian)), '}'])
    reduced = problem.reduced
    if reduced is not None:
        lines.extend(['reduced {', '%slagrangian {' % indent,
            '%s%s%s;' % (indent, indent,
                format_expression(reduced.lagrangian)),
            '%s}' % indent,
            '%salpha[%s] := %s;' % (indent, _format_binder(reduced.index),
                format_expression(reduced.alpha)), '}'])
    return '\n'.join(lines) + '\n'

__all__ = ('BLOCKS', 'KEYWORDS', 'MAX_DEPTH', 'OPAQUE_KINDS', 'Parser',
        'format_expression', 'format_problem', 'parse', 'parse_expression')
