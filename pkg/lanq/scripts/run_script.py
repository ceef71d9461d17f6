import sys

EXIT_RUNTIME_ERROR = 3
EXIT_DEADLOCK = 4
EXIT_STEP_LIMIT = 5


def create_parser(subparsers):
    """Parse the arguments for the run command.

    Returns:
        parser: ArgumentParser for run command.
    """
    run_parser = subparsers.add_parser(
        'run',
        help="Type check a LanQ program, run it from its main method and print the "
             "distribution of outcomes."
    )
    run_parser.add_argument(
        'program', type=str, help='Path to the LanQ source file.'
    )
    run_parser.add_argument(
        '--policy', choices=['round-robin', 'random', 'exhaustive'], default='round-robin',
        help='How processes are scheduled. Default round-robin.'
    )
    run_parser.add_argument(
        '--branch', choices=['exhaustive', 'sample'], default='exhaustive',
        help='Keep every measurement outcome or sample one. Default exhaustive.'
    )
    run_parser.add_argument(
        '--seed', type=int, default=0, help='Seed for random scheduling and sampling. Default 0.'
    )
    run_parser.add_argument(
        '--max-steps', type=int, default=100000,
        help='The maximum number of steps along one path. Default 100000.'
    )
    run_parser.add_argument(
        '--max-paths', type=int, default=10000,
        help='The maximum number of paths exhaustive scheduling explores. Default 10000.'
    )
    run_parser.add_argument(
        '--trace', type=str, default=None, help='Write a JSON-lines step trace to this file.'
    )
    run_parser.add_argument(
        '--emit-rho', action='store_true', help='Print the final density matrix of every outcome.'
    )
    return run_parser


def run(path, parameters):
    from lanq.errors import DeadlockDetected, EvaluationStuck, NoMain, StepLimitExceeded
    from lanq.eval.policy import RunLimits, SchedulerPolicy
    from lanq.eval.runner import run as run_program
    from lanq.eval.trace import Trace
    from lanq.scripts.check_script import EXIT_OK, EXIT_SYNTAX_ERROR, load

    code, context = load(path)
    if code != EXIT_OK:
        return code

    policy = SchedulerPolicy(parameters.policy, parameters.seed, parameters.branch)
    limits = RunLimits(parameters.max_steps, parameters.max_paths)
    trace = Trace(render=True) if parameters.trace else None
    try:
        report = run_program(context, policy, limits, trace=trace, program=path)
    except NoMain as error:
        print(error.render(path), file=sys.stderr)
        return EXIT_SYNTAX_ERROR
    except DeadlockDetected as error:
        print(error.render(path), file=sys.stderr)
        return EXIT_DEADLOCK
    except StepLimitExceeded as error:
        print(error.render(path), file=sys.stderr)
        return EXIT_STEP_LIMIT
    except EvaluationStuck as error:
        print(error.render(path), file=sys.stderr)
        return EXIT_RUNTIME_ERROR
    finally:
        if trace is not None:
            trace.write(parameters.trace)

    sys.stdout.write(report.to_table(emit_rho=parameters.emit_rho))
    return EXIT_RUNTIME_ERROR if report.has_runtime_error else EXIT_OK
