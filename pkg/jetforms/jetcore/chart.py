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
Fibered charts
--------------

A :class:`ChartSpec` is a fibered chart ``(x^i, y^sigma)`` together with the
induced jet coordinates ``y^sigma_J``.  Each jet coordinate is a
:class:`sympy.Symbol`; the chart owns the mapping in both directions::

    >>> chart = ChartSpec(['t'], ['q'])
    >>> chart.fiber_symbol('q', (0, 0))
    q__0_0
    >>> chart.coordinate(chart.fiber_symbol('q', (0,)))
    FiberCoordinate(field='q', multi=MultiIndex(0))

Derivative multi-indices are symmetric, so they are stored sorted: ``y_{10}``
and ``y_{01}`` are the same coordinate.
'''
from collections import Counter
from dataclasses import dataclass
import itertools
import math
import re

import sympy as sp

from jetforms import _, settings
from jetforms.jetcore.exceptions import (ChartError, OrderOverflowError,
        UnknownCoordinateError)

_IDENTIFIER = re.compile(r'^[A-Za-z][A-Za-z0-9_]*$')

class MultiIndex(tuple):
    '''Symmetric multi-index of base directions, always sorted ascending
    '''
    __slots__ = ()

    def __new__(cls, entries=()):
        return super().__new__(cls, sorted(int(entry) for entry in entries))

    def add(self, *indices):
        '''Return the multi-index with further base directions appended'''
        return MultiIndex(tuple(self) + indices)

    def remove(self, index):
        '''Return the multi-index with one occurrence of `index` removed

        :raises ValueError: if `index` does not occur
        '''
        entries = list(self)
        entries.remove(index)
        return MultiIndex(entries)

    def union(self, other):
        return MultiIndex(tuple(self) + tuple(other))

    def multiplicity(self):
        '''Count of each base direction, as a :class:`collections.Counter`'''
        return Counter(self)

    def permutations(self):
        '''Number of distinct orderings of the entries

        This is the multinomial coefficient ``k! / prod(c_i!)``; sums over
        unrestricted index tuples become sums over sorted multi-indices
        weighted by this count.
        '''
        count = math.factorial(len(self))
        for multiplicity in self.multiplicity().values():
            count //= math.factorial(multiplicity)
        return count

    def sort_key(self):
        return (len(self), tuple(self))

    def label(self):
        return ','.join(str(entry) for entry in self)

    def __repr__(self):
        return 'MultiIndex(%s)' % ', '.join(str(entry) for entry in self)

def multi_indices(n, length):
    '''All sorted multi-indices of a given length over ``n`` base directions
    '''
    return [MultiIndex(combo) for combo in
            itertools.combinations_with_replacement(range(n), length)]

def multi_indices_upto(n, max_length):
    '''All sorted multi-indices of length ``0..max_length``, shortest first
    '''
    result = []
    for length in range(max_length + 1):
        result.extend(multi_indices(n, length))
    return result

@dataclass(frozen=True)
class BaseCoordinate:
    '''The base coordinate ``x^index``'''
    index: int

    order = 0

    def sort_key(self):
        return (0, '', 0, (self.index,))

@dataclass(frozen=True)
class FiberCoordinate:
    '''The jet coordinate ``y^field_multi``; an empty multi-index is
    ``y^field`` itself'''
    field: str
    multi: MultiIndex

    @property
    def order(self):
        return len(self.multi)

    def sort_key(self):
        return (1, self.field, len(self.multi), tuple(self.multi))

def fiber_name(field, multi):
    '''Symbol name of a jet coordinate: ``phi``, ``phi__0``, ``phi__0_1``'''
    if not multi:
        return field
    return '%s__%s' % (field, '_'.join(str(entry) for entry in multi))

class ChartSpec(object):
    '''A fibered chart and the jet coordinates it induces

    :arg base_names: names of the base coordinates ``x^0 .. x^{n-1}``
    :arg fields: names of the fiber coordinates ``y^sigma``
    :kwarg params: names of constant scalar parameters.  Parameters have
        zero derivatives and are left alone by fiber scaling.
    :kwarg opaque_symbols: :class:`~jetforms.jetcore.opaque.OpaqueSymbol`
        instances whose atoms may appear in expressions on this chart
    :kwarg max_order: highest jet order for which coordinates may be
        created.  Defaults to :func:`jetforms.settings.max_order`
    :raises ChartError: if names are missing, malformed or clash
    '''
    def __init__(self, base_names, fields, params=(), opaque_symbols=(),
            max_order=None):
        self.base_names = tuple(base_names)
        self.fields = tuple(fields)
        self.params = tuple(params)
        self.opaque_symbols = tuple(opaque_symbols)
        self.max_order = settings.max_order(max_order)

        if not self.base_names:
            raise ChartError(_('a chart needs at least one base coordinate'))
        if not self.fields:
            raise ChartError(_('a chart needs at least one field'))
        names = self.base_names + self.fields + self.params + tuple(
                opaque.name for opaque in self.opaque_symbols)
        for name in names:
            if not isinstance(name, str) or not _IDENTIFIER.match(name) \
                    or '__' in name:
                raise ChartError(_('invalid identifier %(name)r') %
                        {'name': name})
        clashes = [name for name, count in Counter(names).items() if count > 1]
        if clashes:
            raise ChartError(_('identifiers declared twice: %(names)s') %
                    {'names': ', '.join(sorted(clashes))})

        self._base_symbols = tuple(sp.Symbol(name) for name in self.base_names)
        self._param_symbols = dict((name, sp.Symbol(name))
                for name in self.params)
        self._field_set = frozenset(self.fields)
        self._fiber_cache = {}
        self._coordinates = {}
        for index, symbol in enumerate(self._base_symbols):
            self._coordinates[symbol] = BaseCoordinate(index)

        coordinate_names = set(self.base_names + self.fields + self.params)
        self._atoms = {}
        for opaque in self.opaque_symbols:
            opaque.check_chart(self)
            for atom, indices in opaque.atom_table().items():
                if atom.name in coordinate_names or atom in self._atoms:
                    raise ChartError(_('opaque atom %(atom)s clashes with'
                        ' another identifier') % {'atom': atom.name})
                self._atoms[atom] = (opaque, indices)
        self.atoms = frozenset(self._atoms)

        self._names = {}
        for symbol in itertools.chain(self._base_symbols,
                self._param_symbols.values(), self._atoms):
            self._names[symbol.name] = symbol

    @property
    def n(self):
        '''Base dimension'''
        return len(self.base_names)

    @property
    def m(self):
        '''Number of fields'''
        return len(self.fields)

    def _key(self):
        return (self.base_names, self.fields, self.params,
                tuple(opaque.key() for opaque in self.opaque_symbols),
                self.max_order)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, ChartSpec):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return 'ChartSpec(%r, %r, params=%r, max_order=%r)' % (
                list(self.base_names), list(self.fields), list(self.params),
                self.max_order)

    def with_max_order(self, max_order):
        '''Return the same chart with a different maximum jet order'''
        return ChartSpec(self.base_names, self.fields, self.params,
                self.opaque_symbols, max_order=max_order)

    #
    # Symbols
    #

    @property
    def base_symbols(self):
        return self._base_symbols

    def base_symbol(self, index):
        try:
            return self._base_symbols[index]
        except (IndexError, TypeError):
            raise UnknownCoordinateError(_('unknown coordinate: base index'
                ' %(index)r') % {'index': index})

    def param_symbol(self, name):
        try:
            return self._param_symbols[name]
        except KeyError:
            raise UnknownCoordinateError(_('unknown parameter %(name)r') %
                    {'name': name})

    @property
    def param_symbols(self):
        return tuple(self._param_symbols[name] for name in self.params)

    def fiber_symbol(self, field, multi=()):
        '''The symbol of ``y^field_multi``

        :raises UnknownCoordinateError: if `field` is not a field of the chart
            or an entry of `multi` is not a base direction
        :raises OrderOverflowError: if ``len(multi)`` exceeds
            :attr:`max_order`
        '''
        multi = MultiIndex(multi)
        key = (field, multi)
        symbol = self._fiber_cache.get(key)
        if symbol is not None:
            return symbol
        if field not in self._field_set:
            raise UnknownCoordinateError(_('unknown coordinate: field'
                ' %(field)r') % {'field': field})
        if multi and (multi[0] < 0 or multi[-1] >= self.n):
            raise UnknownCoordinateError(_('unknown coordinate: %(field)s'
                ' with derivative index %(multi)s') %
                {'field': field, 'multi': multi.label()})
        name = fiber_name(field, multi)
        if len(multi) > self.max_order:
            raise OrderOverflowError(_('jet coordinate %(name)s has order'
                ' %(order)s, beyond the maximum order %(max)s') %
                {'name': name, 'order': len(multi), 'max': self.max_order},
                coordinate=name)
        symbol = sp.Symbol(name)
        self._fiber_cache[key] = symbol
        self._coordinates[symbol] = FiberCoordinate(field, multi)
        return symbol

    def symbol_for(self, coordinate):
        if isinstance(coordinate, BaseCoordinate):
            return self.base_symbol(coordinate.index)
        return self.fiber_symbol(coordinate.field, coordinate.multi)

    def _lookup(self, symbol):
        coordinate = self._coordinates.get(symbol)
        if coordinate is None and isinstance(symbol, sp.Symbol) \
                and symbol not in self._atoms:
            resolved = self.resolve_name(symbol.name)
            if resolved is not None and resolved == symbol:
                coordinate = self._coordinates.get(resolved)
        return coordinate

    def coordinate(self, symbol):
        '''The :class:`BaseCoordinate` or :class:`FiberCoordinate` of a symbol

        :raises UnknownCoordinateError: if `symbol` is not a jet coordinate
            of this chart (parameters and opaque atoms are not coordinates)
        '''
        coordinate = self._lookup(symbol)
        if coordinate is not None:
            return coordinate
        raise UnknownCoordinateError(_('unknown coordinate %(symbol)s') %
                {'symbol': symbol})

    def kind(self, symbol):
        '''Classify a symbol as ``'base'``, ``'fiber'``, ``'param'``,
        ``'atom'`` or :data:`None`'''
        if symbol in self._atoms:
            return 'atom'
        if isinstance(symbol, sp.Symbol) and symbol.name in self._param_symbols:
            return 'param'
        try:
            coordinate = self.coordinate(symbol)
        except UnknownCoordinateError:
            return None
        if isinstance(coordinate, BaseCoordinate):
            return 'base'
        return 'fiber'

    def resolve_name(self, name):
        '''Return the symbol a name stands for on this chart, or :data:`None`

        Used when reading canonical expression strings back in.
        '''
        symbol = self._names.get(name)
        if symbol is not None:
            return symbol
        field, sep, rest = name.partition('__')
        if field not in self._field_set:
            return None
        if not sep:
            return self.fiber_symbol(field)
        try:
            multi = tuple(int(entry) for entry in rest.split('_'))
        except ValueError:
            return None
        try:
            return self.fiber_symbol(field, multi)
        except UnknownCoordinateError:
            return None

    def parse_expression(self, text):
        '''Read a canonical expression string (as written by
        :func:`sympy.sstr`) back into a sympy expression on this chart'''
        names = set(re.findall(r'[A-Za-z_][A-Za-z0-9_]*', text))
        local = {}
        for name in names:
            symbol = self.resolve_name(name)
            if symbol is not None:
                local[name] = symbol
        return sp.sympify(text, locals=local, rational=True)

    #
    # Coordinate enumeration
    #

    def multi_indices(self, length):
        return multi_indices(self.n, length)

    def multi_indices_upto(self, max_length):
        return multi_indices_upto(self.n, max_length)

    def fiber_coordinates(self, order):
        '''All ``(field, multi)`` pairs with ``len(multi) <= order``'''
        return [(field, multi) for field in self.fields
                for multi in self.multi_indices_upto(order)]

    def coordinates(self, order):
        '''Symbols of all jet coordinates up to `order`: base coordinates
        first, then fibers grouped by field, by order, lexicographically'''
        return list(self._base_symbols) + [self.fiber_symbol(field, multi)
                for field, multi in self.fiber_coordinates(order)]

    #
    # Opaque atoms
    #

    def atom_info(self, atom):
        '''Return the ``(opaque_symbol, indices)`` pair behind an atom'''
        return self._atoms[atom]

    def atoms_in(self, expr):
        return expr.free_symbols & self.atoms

    def has_atoms(self, expr):
        return bool(self._atoms) and not self.atoms.isdisjoint(
                expr.free_symbols)

    def atom_derivative(self, atom, symbol):
        '''Partial derivative of an opaque atom with respect to a coordinate
        symbol, from the owning symbol's derivative rule'''
        opaque, indices = self._atoms[atom]
        return opaque.derivative(self, indices, symbol)

    def atom_dependencies(self, atom):
        opaque, indices = self._atoms[atom]
        return opaque.dependencies(self, indices)

    #
    # Orders
    #

    def jet_order(self, expr):
        '''Highest jet order of a coordinate ``expr`` depends on

        Opaque atoms count with the order of their dependencies; symbols
        foreign to the chart are ignored.
        '''
        order = 0
        for symbol in expr.free_symbols:
            coordinate = self._lookup(symbol)
            if isinstance(coordinate, FiberCoordinate):
                order = max(order, len(coordinate.multi))
            elif symbol in self._atoms:
                for dependency in self.atom_dependencies(symbol):
                    order = max(order, self.coordinate(dependency).order)
        return order

    def fiber_symbols_in(self, expr):
        return [symbol for symbol in expr.free_symbols
                if isinstance(self._lookup(symbol), FiberCoordinate)]

__all__ = ('BaseCoordinate', 'ChartSpec', 'FiberCoordinate', 'MultiIndex',
        'fiber_name', 'multi_indices', 'multi_indices_upto')
