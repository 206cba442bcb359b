#!/usr/bin/env python
"""
Entry point for the workbench and its test suite:

    python manage.py skewcat report category skewcat/fixtures/Z3-broken.json
    python manage.py test skewcat

Run bare, it prints the usage of the skewcat command.
"""
import os
import sys


def main(argv):
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "skewlab.settings")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "skewlab needs Django. Install requirements.txt into the active "
            "virtual environment, or add Django to your PYTHONPATH."
        ) from exc

    if len(argv) == 1:
        argv = argv + ["help", "skewcat"]
    execute_from_command_line(argv)


if __name__ == "__main__":
    main(sys.argv)
