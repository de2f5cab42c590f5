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
jetforms.jetcore exceptions
---------------------------

Exception classes thrown by the chart bookkeeping and the scalar expression
engine.
'''
from jetforms import exceptions

class ChartError(exceptions.JetformsError):
    '''Exception thrown when a chart declaration is inconsistent.
    '''
    pass

class UnknownCoordinateError(exceptions.JetformsError):
    '''Exception thrown when a symbol is not a coordinate of the chart.
    '''
    pass

class OrderOverflowError(exceptions.JetformsError):
    '''Exception thrown when a jet coordinate beyond the chart's maximum
    order would be needed.

    :attr:`coordinate` holds the name of the coordinate that overflowed.
    '''
    def __init__(self, message, coordinate=None):
        super().__init__(message)
        self.coordinate = coordinate

class NotFiberScalableError(exceptions.JetformsError):
    '''Exception thrown when an opaque symbol has no declared behaviour under
    fiber scaling.
    '''
    pass

class HomotopyError(exceptions.JetformsError):
    '''Exception thrown when a fiber-scaled integrand is not polynomial in
    the homotopy parameter.
    '''
    pass

class ZeroSectionDomainError(exceptions.JetformsError):
    '''Exception thrown when an opaque symbol is undefined on the zero
    section.
    '''
    pass

class SingularMetricError(exceptions.JetformsError):
    '''Exception thrown by numeric hooks when a metric is degenerate.
    '''
    pass

__all__ = ('ChartError', 'HomotopyError', 'NotFiberScalableError',
        'OrderOverflowError', 'SingularMetricError', 'UnknownCoordinateError',
        'ZeroSectionDomainError')
