# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('..'))


# -- Project information -----------------------------------------------------

project = 'pde_nudging'
copyright = '2026, pde_nudging developers'
author = 'pde_nudging developers'

# The short X.Y version
version = 'v1.0'
# The full version, including alpha/beta/rc tags
release = 'v1.0'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.imgmath',
    'sphinx.ext.todo',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# Heavy imports are not needed to read docstrings.
autodoc_mock_imports = ['matplotlib', 'pandas', 'ruamel', 'sympy']


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'pde_nudgingdoc'


# -- Options for LaTeX output ------------------------------------------------

latex_elements = {}
latex_documents = [
    (master_doc, 'pde_nudging.tex', 'pde\\_nudging Documentation',
     author, 'manual'),
]


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'pde_nudging', 'pde_nudging Documentation',
     [author], 1)
]


# -- Extension configuration -------------------------------------------------

# If true, `todo` and `todoList` produce output, else they produce nothing.
todo_include_todos = True
