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
---------------
Basis one-forms
---------------

The contact basis of ``J^s Y`` is

* ``dx^i``,
* the contact forms ``w^sigma_J = dy^sigma_J - y^sigma_{J+j} dx^j`` for
  ``|J| <= s - 1``,
* the top order differentials ``dy^sigma_J`` for ``|J| = s``.

A :class:`BasisOneForm` is one of those, or a natural ``dy^sigma_J`` of any
order.  The natural kind only shows up while converting a form to the
natural basis ``(dx^i, dy^sigma_J)``.

Basis one-forms are totally ordered, ``dx < contact < top < natural``, then
by field, length and entries of ``J``.  Wedge monomials are kept sorted in
this order.
'''
from dataclasses import dataclass

from jetforms import _
from jetforms.forms.exceptions import FormError
from jetforms.jetcore.chart import MultiIndex

DX = 0
CONTACT = 1
DYTOP = 2
DY = 3

_KIND_NAMES = {DX: 'dx', CONTACT: 'w', DYTOP: 'dy', DY: 'dy'}

@dataclass(frozen=True)
class BasisOneForm:
    '''One element of the contact (or natural) basis

    For ``dx^i`` only :attr:`index` is meaningful; for the others only
    :attr:`field` and :attr:`multi`.
    '''
    kind: int
    index: int = -1
    field: str = ''
    multi: MultiIndex = MultiIndex()

    def sort_key(self):
        if self.kind == DX:
            return (DX, '', 0, (self.index,))
        return (self.kind, self.field, len(self.multi), tuple(self.multi))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    @property
    def is_fiber(self):
        '''True for every kind but ``dx``'''
        return self.kind != DX

    def label(self):
        '''Serialised name: ``dx[i]``, ``w[field;J]`` or ``dy[field;J]``'''
        if self.kind == DX:
            return 'dx[%s]' % self.index
        return '%s[%s;%s]' % (_KIND_NAMES[self.kind], self.field,
                self.multi.label())

    def __repr__(self):
        return self.label()

def dx_basis(index):
    return BasisOneForm(DX, index=int(index))

def contact_basis(field, multi=()):
    return BasisOneForm(CONTACT, field=field, multi=MultiIndex(multi))

def top_basis(field, multi=()):
    return BasisOneForm(DYTOP, field=field, multi=MultiIndex(multi))

def natural_basis(field, multi=()):
    return BasisOneForm(DY, field=field, multi=MultiIndex(multi))

def parse_label(label, order):
    '''Inverse of :meth:`BasisOneForm.label` for a form of the given order

    ``dy[...]`` is read as the top order differential; its multi-index must
    have length `order`.

    :raises FormError: if the label is malformed
    '''
    name, sep, rest = label.partition('[')
    if not sep or not rest.endswith(']'):
        raise FormError(_('malformed basis one-form %(label)r') %
                {'label': label})
    rest = rest[:-1]
    try:
        if name == 'dx':
            return dx_basis(int(rest))
        field, sep, multi = rest.partition(';')
        if not sep or not field:
            raise ValueError(rest)
        multi = MultiIndex(int(entry) for entry in multi.split(',')
                if entry != '')
    except ValueError:
        raise FormError(_('malformed basis one-form %(label)r') %
                {'label': label})
    if name == 'w':
        return contact_basis(field, multi)
    if name == 'dy':
        if len(multi) != order:
            raise FormError(_('%(label)s is not a top order differential at'
                ' order %(order)s') % {'label': label, 'order': order})
        return top_basis(field, multi)
    raise FormError(_('malformed basis one-form %(label)r') % {'label': label})

def sort_monomial(factors):
    '''Sort the factors of a wedge monomial

    :returns: ``(sign, sorted_factors)``; ``sign`` is ``0`` when a factor
        repeats and the monomial vanishes
    '''
    factors = list(factors)
    sign = 1
    # insertion sort, counting transpositions
    for position in range(1, len(factors)):
        current = factors[position]
        key = current.sort_key()
        scan = position - 1
        while scan >= 0 and factors[scan].sort_key() > key:
            factors[scan + 1] = factors[scan]
            scan -= 1
            sign = -sign
        factors[scan + 1] = current
    for first, second in zip(factors, factors[1:]):
        if first == second:
            return 0, None
    return sign, tuple(factors)

__all__ = ('BasisOneForm', 'CONTACT', 'DX', 'DY', 'DYTOP', 'contact_basis',
        'dx_basis', 'natural_basis', 'parse_label', 'sort_monomial',
        'top_basis')
