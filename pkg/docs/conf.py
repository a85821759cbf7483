#!/usr/bin/env python
#
# Sphinx configuration of the liedual documentation.
# Build the API pages first with: sphinx-apidoc -f -o docs/ src/

import liedual

# -- General configuration ---------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.viewcode",
    "sphinx.ext.mathjax",
    "sphinx_mdinclude",  # https://pypi.org/project/sphinx_mdinclude/
    "sphinx.ext.napoleon",
]

autosummary_generate = True
autoclass_content = "both"         # Add __init__ doc (ie. params) to class summaries
html_show_sourcelink = False
autodoc_inherit_docstrings = True
autodoc_member_order = "bysource"  # Keep the reading order of each module
add_module_names = False           # Remove namespaces from class/method signatures
napoleon_google_docstring = True
napoleon_numpy_docstring = False

templates_path = ["_templates"]
source_suffix = [".rst", ".md"]
master_doc = "index"

project = "liedual - Lie duality toolkit"
doc_title = project
module_name = "liedual"
copyright = "2026, The liedual developers"
author = "The liedual developers"

version = liedual.__version__
release = liedual.__version__

language = "en"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store", "modules.rst"]
pygments_style = "sphinx"

# -- Options for HTML output -------------------------------------------

html_theme = "pydata_sphinx_theme"
html_theme_options = {
    "header_links_before_dropdown": 5,
    "show_nav_level": 2,
    "show_toc_level": 2,
    "navigation_depth": 2,
}
html_sidebars = {
    "*": [],
}
htmlhelp_basename = module_name + "_doc"

# -- Options for manual page output ------------------------------------

man_pages = [
    (master_doc, module_name, doc_title, [author], 1),
]
