#!/usr/bin/env python
#
# kkclique documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

import kkclique  # noqa: E402

# -- General configuration ---------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode', 'sphinx.ext.mathjax']
autodoc_member_order = 'bysource'

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'kkclique'
copyright = "2022, satya_pati"
author = "satya_pati"

version = kkclique.__version__
release = kkclique.__version__

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'kkcliquedoc'

# -- Options for manual page output ------------------------------------

man_pages = [
    (master_doc, 'kkclique',
     'Kruskal-Katona clique bounds and extremal graph search',
     [author], 1)
]
