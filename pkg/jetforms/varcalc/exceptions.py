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
jetforms.varcalc exceptions
---------------------------

Exception classes thrown by the variational operators.
'''
from jetforms import exceptions

class FirstOrderRequiredError(exceptions.JetformsError):
    '''Exception thrown when a construction defined for first order
    Lagrangians only is given a Lagrangian of another order.
    '''
    pass

class SplitError(exceptions.VerificationError):
    '''Exception thrown when a splitting ``lambda = lambda' + h d alpha`` does
    not hold.  :attr:`residual` holds the nonzero difference as a form.
    '''
    pass

class OrderBoundError(exceptions.VerificationError):
    '''Exception thrown when a computed Lepage equivalent exceeds the order
    it is known to have.
    '''
    pass

class CorrectionMismatchError(exceptions.VerificationError):
    '''Exception thrown when the canonical and principal Lepage equivalents
    do not differ by the expected correction.
    '''
    pass

__all__ = ('CorrectionMismatchError', 'FirstOrderRequiredError',
        'OrderBoundError', 'SplitError')
