#!/usr/bin/env python
"""Command-line entry point: Django's management utility plus the pipeline subcommands."""
import os
import sys
from typing import Optional, Sequence

SUBCOMMAND_ALIASES = {
    'links-stats': 'links_stats',
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run a subcommand and return its exit code."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'marebito.project.settings')
    try:
        from django.core.management import CommandError, execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            'available on your PYTHONPATH environment variable? Did you '
            'forget to activate a virtual environment?'
        ) from exc

    argv = list(sys.argv if argv is None else argv)
    if len(argv) > 1:
        argv[1] = SUBCOMMAND_ALIASES.get(argv[1], argv[1])

    try:
        execute_from_command_line(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else int(ex.code is not None)
    except CommandError as ex:
        # Argument errors are raised before the command runs
        sys.stderr.write(f'{ex}\n')
        return ex.returncode

    return 0


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
