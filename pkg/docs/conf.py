# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import re
import sys
sys.path.insert(0, os.path.abspath('..'))

import sphinx_rtd_theme


# -- Project information -----------------------------------------------------

project = 'piecewise-rsk'
copyright = '2024-present, piecewise-rsk developers'
author = 'piecewise-rsk developers'

with open(os.path.join(os.path.dirname(__file__), '..', 'piecewise_rsk', '__init__.py'), encoding='utf-8') as f:
    release = re.search(r'^__version__\s*=\s*[\'"]([^\'"]*)[\'"]', f.read(), re.MULTILINE).group(1)


# -- General configuration ---------------------------------------------------

extensions = [
        'sphinx_rtd_theme',
        'sphinx.ext.autodoc',
        'sphinx.ext.napoleon',
]

autodoc_member_order = 'bysource'

templates_path = ['_templates']

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_static_path = ['_static']
