# -*- coding: utf-8 -*-
#
# jetforms documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing
# dir.  Values not set here fall back to the sphinx defaults.

import sys, os

# The package is imported from the source tree for autodoc
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))
import jetforms
import jetforms.release

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.doctest',
        'sphinx.ext.intersphinx', 'sphinx.ext.todo', 'sphinx.ext.coverage',
        'sphinx.ext.mathjax']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = jetforms.release.NAME
copyright = jetforms.release.COPYRIGHT

# The short X.Y version and the full version
version = '.'.join(jetforms.__version__.split('.')[:2])
release = jetforms.__version__

language = 'en'
exclude_patterns = ['_build']

add_function_parentheses = True
show_authors = True
pygments_style = 'sphinx'
highlight_language = 'python'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'jetformsdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
  ('index', 'jetforms.tex', 'jetforms Documentation',
   jetforms.release.AUTHOR, 'manual'),
]

# -- Options for autodoc -------------------------------------------------------

automodule_skip_lines = 4
autoclass_content = "class"

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'sympy': ('https://docs.sympy.org/latest', None),
    'numpy': ('https://numpy.org/doc/stable', None),
}

rst_epilog = '''
.. |projpage| replace:: project webpage
.. _projpage: %(url)s
.. |downldpage| replace:: download page
.. _downldpage: %(download)s
''' % {'url': jetforms.release.URL, 'download': jetforms.release.DOWNLOAD_URL}
