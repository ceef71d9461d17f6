import sys

EXIT_OK = 0
EXIT_TYPE_ERROR = 1
EXIT_SYNTAX_ERROR = 2


def create_parser(subparsers):
    """Parse the arguments for the check command.

    Returns:
        parser: ArgumentParser for check command.
    """
    check_parser = subparsers.add_parser(
        'check', help="Parse and type check a LanQ program without running it."
    )
    check_parser.add_argument(
        'program', type=str, help='Path to the LanQ source file.'
    )
    return check_parser


def load(path, out=None):
    """
    Read, parse, lower and type check a program, reporting any failure.

    Returns:
        (exit code, MethodContext or None).
    """
    from lanq import load_program
    from lanq.errors import LanQError, LanQTypeError
    from lanq.typecheck.checker import check_program

    out = sys.stderr if out is None else out
    try:
        with open(path, 'r', encoding='utf-8') as source_file:
            source = source_file.read()
    except UnicodeDecodeError as error:
        message = f'not UTF-8 text, byte {error.start}: {error.reason}'
        print(LanQError(message, rule='input').render(path), file=out)
        return EXIT_SYNTAX_ERROR, None
    try:
        context = load_program(source)
    except LanQError as error:
        print(error.render(path), file=out)
        return EXIT_SYNTAX_ERROR, None
    try:
        check_program(context)
    except LanQTypeError as error:
        print(error.render(path), file=out)
        return EXIT_TYPE_ERROR, None
    return EXIT_OK, context


def run(path, parameters=None):
    code, _ = load(path)
    if code == EXIT_OK:
        print(f"{path}: well-typed")
    return code
