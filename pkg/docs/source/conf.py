# Sphinx configuration of the boolrmt API reference.

import os
import re
import sys

root = os.path.abspath(os.path.join(__file__, '..', '..', '..'))
sys.path.insert(0, root)

with open(os.path.join(root, 'boolrmt', '_version.py')) as f:
    version = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]", f.read(), re.M).group(1)

project = 'boolrmt'
author = 'boolrmt Contributors'
release = version

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.napoleon',
    'sphinxcontrib.katex',
]

templates_path = ['_templates']
autosummary_generate = True

html_theme = 'sphinx_rtd_theme'
html_theme_options = {'collapse_navigation': False}
