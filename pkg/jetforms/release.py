'''
Information about this jetforms release.
'''

from jetforms import _, __version__

NAME = 'jetforms'
VERSION = __version__
DESCRIPTION = _('Euler-Lagrange forms and Lepage equivalents on jet bundles')
LONG_DESCRIPTION = _('''
jetforms is a symbolic engine for the calculus of variations on jet
prolongations of fibered manifolds.  Give it a Lagrangian written in a small
problem-definition language and it computes the Euler-Lagrange form, the
principal (Poincare-Cartan), fundamental, canonical and reduced Lepage
equivalents, the fibered homotopy operator and the Vainberg-Tonti
Lagrangian, and Noether currents.

The closure property of the canonical Lepage equivalent (closed exactly when
the Lagrangian is variationally trivial) is checked both symbolically, in
exact rational arithmetic, and numerically along polynomial test sections.
''')
AUTHOR = 'The jetforms developers'
EMAIL = 'jetforms-devel@lists.example.org'
COPYRIGHT = '2026 The jetforms developers'
URL = 'https://example.org/jetforms'
DOWNLOAD_URL = 'https://pypi.org/project/jetforms'
LICENSE = 'LGPLv2+'

__all__ = ('NAME', 'VERSION', 'DESCRIPTION', 'LONG_DESCRIPTION', 'AUTHOR',
        'EMAIL', 'COPYRIGHT', 'URL', 'DOWNLOAD_URL', 'LICENSE')
