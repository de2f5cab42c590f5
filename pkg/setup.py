#!/usr/bin/python -tt
# -*- coding: utf-8 -*-

from setuptools import setup

import jetforms.release

packages = [
    'jetforms',
    'jetforms.jetcore',
    'jetforms.forms',
    'jetforms.varcalc',
    'jetforms.geomver',
    'jetforms.lagdsl',
    'jetforms.cli',
]

setup(name=jetforms.release.NAME,
      version=str(jetforms.release.VERSION),
      description=jetforms.release.DESCRIPTION,
      long_description=jetforms.release.LONG_DESCRIPTION,
      author=jetforms.release.AUTHOR,
      author_email=jetforms.release.EMAIL,
      license=jetforms.release.LICENSE,
      url=jetforms.release.URL,
      download_url=jetforms.release.DOWNLOAD_URL,
      keywords='jet bundles calculus of variations Lepage equivalent',
      classifiers=[
            'Development Status :: 4 - Beta',
            'Intended Audience :: Science/Research',
            'License :: OSI Approved :: GNU Library or Lesser General Public License (LGPL)',
            'Operating System :: OS Independent',
            'Programming Language :: Python :: 3',
            'Topic :: Scientific/Engineering :: Mathematics',
            'Topic :: Scientific/Engineering :: Physics',
          ],
      packages=packages,
      package_data={'jetforms': ['problems/*.jf']},
      python_requires='>=3.8',
      install_requires=['sympy>=1.9', 'numpy>=1.17'],
      extras_require={'test': ['pytest', 'babel'], 'docs': ['sphinx']},
      entry_points={'console_scripts': ['jetforms = jetforms.cli.main:main']},
)
