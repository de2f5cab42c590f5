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
-----------------------
Message catalog loading
-----------------------

jetforms marks every user visible message (error text, command line help,
report lines) for translation.  This module finds the :term:`message
catalogs` for a domain and hands back the two functions used to mark
strings::

    from jetforms import i18n
    _, N_ = i18n.easy_gettext_setup('jetforms.core')

    print(_('unknown coordinate'))
    print(N_('%(num)s failure', '%(num)s failures', count) % {'num': count})

When no catalog can be found for the current locale the messages are
returned untranslated.
'''
import gettext
import itertools
import os
import sys

from jetforms.versioning import version_tuple_to_string

__version_info__ = ((1, 0, 0),)
__version__ = version_tuple_to_string(__version_info__)

_DEFAULT_LOCALEDIR = os.path.join(sys.prefix, 'share', 'locale')

def get_translation_object(domain, localedirs=tuple(), languages=None,
        fallback=True):
    '''Get a translation object bound to the :term:`message catalogs`

    :arg domain: Name of the message domain
    :kwarg localedirs: Iterator of directories to search for catalogs before
        falling back to ``sys.prefix`` + :file:`/share/locale`
    :kwarg languages: List of languages to try.  Default is to use the
        environment (:envvar:`LANGUAGE`, :envvar:`LC_ALL`, ...)
    :kwarg fallback: If :data:`True`, return a :class:`gettext.NullTranslations`
        when no catalog exists.  Otherwise raise :exc:`OSError`
    :returns: a :class:`gettext.NullTranslations` compatible object

    Catalogs found in several directories are stacked so that the first
    directory in :attr:`localedirs` wins and later ones act as fallbacks.
    '''
    mofiles = []
    for localedir in itertools.chain(localedirs, (_DEFAULT_LOCALEDIR,)):
        mofiles.extend(gettext.find(domain, localedir, languages, all=True))
    if not mofiles:
        if fallback:
            return gettext.NullTranslations()
        raise OSError('No translation file found for domain %s' % domain)

    stacked = None
    for mofile in mofiles:
        with open(mofile, 'rb') as mofile_fh:
            translation = gettext.GNUTranslations(mofile_fh)
        if stacked is None:
            stacked = translation
        else:
            stacked.add_fallback(translation)
    return stacked

def easy_gettext_setup(domain, localedirs=tuple()):
    '''Setup translation functions for an application

    :arg domain: Name of the message domain
    :kwarg localedirs: Iterator of directories to look for :term:`message
        catalogs` under
    :returns: tuple of the :mod:`gettext` function and the :mod:`gettext`
        function for plurals
    '''
    translations = get_translation_object(domain, localedirs=localedirs)
    return (translations.gettext, translations.ngettext)

__all__ = ('easy_gettext_setup', 'get_translation_object')
