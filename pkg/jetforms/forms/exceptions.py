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
-------------------------
jetforms.forms exceptions
-------------------------

Exception classes thrown by the exterior algebra.
'''
from jetforms import exceptions

class FormError(exceptions.JetformsError):
    '''Exception thrown when forms cannot be combined or a monomial is not
    valid at the order of its form.
    '''
    pass

class ProjectabilityError(exceptions.JetformsError):
    '''Exception thrown when the base components of a vector field depend on
    fiber coordinates.
    '''
    pass

__all__ = ('FormError', 'ProjectabilityError')
