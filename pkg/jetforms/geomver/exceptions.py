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
jetforms.geomver exceptions
---------------------------

Exception classes thrown by the numeric verification helpers.
'''
from jetforms import exceptions

class MissingAssignmentError(exceptions.JetformsError):
    '''Exception thrown when an expression is evaluated at a jet point that
    has no value for one of its symbols.

    :attr:`coordinate` holds the name of that symbol.
    '''
    def __init__(self, message, coordinate=None):
        super().__init__(message)
        self.coordinate = coordinate

__all__ = ('MissingAssignmentError',)
