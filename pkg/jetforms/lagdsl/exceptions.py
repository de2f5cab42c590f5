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
--------------------------
jetforms.lagdsl exceptions
--------------------------

Exception classes thrown while reading problem files.  All of them carry
the position of the offending text when it is known.
'''
from jetforms import _, exceptions

class LagdslError(exceptions.JetformsError):
    '''Base class of the problem file errors

    :attr:`line` and :attr:`column` are 1-based, or :data:`None` when the
    error has no position in a source text.
    '''
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = _('line %(line)s, column %(column)s: %(message)s') % {
                    'line': line, 'column': column, 'message': message}
        super().__init__(message)
        self.line = line
        self.column = column

class ParseError(LagdslError):
    '''Exception thrown on a syntax error.

    :attr:`expected` is the set of token texts (or token kinds such as
    ``NUMBER``) that would have been accepted.
    '''
    def __init__(self, message, line=None, column=None, expected=()):
        super().__init__(message, line, column)
        self.expected = frozenset(expected)

class ElaborationError(LagdslError):
    '''Exception thrown when a syntactically valid problem is inconsistent.
    '''
    pass

class UndeclaredIdentifierError(ElaborationError):
    '''Exception thrown for a name that was never declared.
    '''
    pass

class IndexRangeError(ElaborationError):
    '''Exception thrown when an index lies outside its slot.
    '''
    pass

class DerivativeOrderError(ElaborationError):
    '''Exception thrown for a derivative beyond the declared order.
    '''
    pass

class DimensionMismatchError(ElaborationError):
    '''Exception thrown when an index range or the number of indices does
    not fit the slot it is used in.
    '''
    pass

__all__ = ('DerivativeOrderError', 'DimensionMismatchError',
        'ElaborationError', 'IndexRangeError', 'LagdslError', 'ParseError',
        'UndeclaredIdentifierError')
