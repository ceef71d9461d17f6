"""
Example LanQ programs shipped with the package.

Programs whose names start with ``wt_`` are well-typed and use no channel
communication, ``rte_`` programs end in a runtime error and ``linear_``
programs break ownership of a qubit or channel end.
"""

import os

CORPUS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'corpus')
EXTENSION = '.lq'


def corpus_names(prefix=''):
    """Sorted names of the corpus programs starting with prefix, without extension."""
    return sorted(
        file_name[:-len(EXTENSION)] for file_name in os.listdir(CORPUS_DIR)
        if file_name.endswith(EXTENSION) and file_name.startswith(prefix)
    )


def corpus_path(name):
    """
    Path to a corpus program.

    Raises:
        KeyError: if no program has that name.
    """
    path = os.path.join(CORPUS_DIR, name + EXTENSION)
    if not os.path.isfile(path):
        raise KeyError(f"No corpus program called '{name}'.")
    return path


def load_corpus(name):
    """The source text of a corpus program."""
    with open(corpus_path(name), encoding='utf-8') as source_file:
        return source_file.read()
