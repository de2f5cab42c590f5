# -*- coding: utf-8 -*-
#
# Copyright (c) 2026 The jetforms developers
#
# jetforms is free software; you can redistribute it and/or modify it under
# the terms of the GNU Lesser General Public License as published by the Free
# Software Foundation; either version 2.1 of the License, or (at your option)
# any later version.
#
# jetforms is distributed in the hope that it will be useful, but WITHOUT ANY
# WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for
# more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with jetforms; if not, see <http://www.gnu.org/licenses/>
#
'''
------------------------
Base jetforms exceptions
------------------------

Exception classes for jetforms and the root of the exception hierarchy for
all jetforms modules.
'''

class JetformsError(Exception):
    '''Base exception class for any error thrown directly by jetforms.
    '''
    pass

class VerificationError(JetformsError):
    '''Base class for a computed result that failed one of its own checks.

    These are raised when an identity that must hold exactly (an order bound,
    a splitting of a Lagrangian, a relation between two Lepage equivalents)
    does not.  The offending residual, when there is one, is kept in
    :attr:`residual`.
    '''
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual

__all__ = ('JetformsError', 'VerificationError')
