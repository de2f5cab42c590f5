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
----------------------------
PEP-440 compliant versioning
----------------------------

Every jetforms package carries a machine comparable ``__version_info__``
tuple next to the human readable ``__version__`` string::

    from jetforms.versioning import version_tuple_to_string
    __version_info__ = ((0, 3, 0), ('rc', 1))
    __version__ = version_tuple_to_string(__version_info__)   # '0.3.0rc1'
'''

# Separator written before each kind of version segment
_SEGMENT_PREFIX = {'a': '', 'b': '', 'rc': '', 'c': '', 'post': '.',
        'dev': '.'}

def version_tuple_to_string(version_info):
    '''Return a :pep:`440` version string from a version tuple

    :arg version_info: Nested tuples.  The first holds the release numbers,
        the optional following ones hold a pre-release, post-release or
        development marker followed by its number::

            ((Major, Minor, [Micro]), [(a|b|rc, N)], [(post, N)], [(dev, N)])

    :returns: a version string such as ``1.0.0a2.dev3456``
    :raises ValueError: if a segment marker is not understood
    '''
    release, segments = version_info[0], version_info[1:]
    pieces = ['.'.join(str(number) for number in release)]
    for segment in segments:
        marker = segment[0]
        if isinstance(marker, bytes):
            marker = marker.decode('ascii')
        if marker not in _SEGMENT_PREFIX:
            raise ValueError('unknown version segment %r' % (marker,))
        numbers = '.'.join(str(number) for number in segment[1:]) or '0'
        pieces.append('%s%s%s' % (_SEGMENT_PREFIX[marker], marker, numbers))
    return ''.join(pieces)

__version_info__ = ((1, 1, 0),)
__version__ = version_tuple_to_string(__version_info__)

__all__ = ('version_tuple_to_string',)
