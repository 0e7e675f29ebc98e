# -*- coding: utf-8 -*-
#
# pybell documentation build configuration file.

import sys
import os

# Document the package from the source tree
sys.path.insert(0, os.path.abspath('../..'))

from pybell.version import VERSION

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinxarg.ext',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'pybell'
author = u'the pybell developers'
copyright = u'2026, the pybell developers'

version = VERSION[:3]
release = VERSION

language = None
exclude_patterns = []
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

import sphinx_rtd_theme
html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_static_path = ['_static']

htmlhelp_basename = 'pybelldoc'

# -- Options for LaTeX and manual page output -----------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'pybell.tex', u'pybell Documentation',
   u'the pybell developers', 'manual'),
]

man_pages = [
    ('index', 'pybell', u'pybell Documentation',
     [u'the pybell developers'], 1)
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy' : ('https://numpy.org/doc/stable/', None),
    'scipy' : ('https://docs.scipy.org/doc/scipy/', None),
    'pandas': ('https://pandas.pydata.org/pandas-docs/stable/', None),
}
