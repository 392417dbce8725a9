# -*- coding: utf-8 -*-
#
# rabi documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.
import os
import sys

sys.path.insert(0, os.path.abspath('../src'))
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'rabi.settings.production')

import django  # NOQA

django.setup()

import rabi  # NOQA

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.todo',
              'sphinx.ext.mathjax']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'rabi (' + rabi.__version__ + ')'
copyright = 'Content Licensed under Creative Commons BY 3.0'
version = rabi.__version__
release = rabi.__version__

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = True

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
html_theme_options = {
    'show_related': True
}
htmlhelp_basename = 'rabidoc'

autodoc_member_order = 'bysource'

rst_prolog = '.. |rabi_version| replace:: %s\n' % rabi.__version__
