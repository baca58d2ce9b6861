#!/usr/bin/env python
"""
Command-line entry point of ridgenet

    python manage.py diagnose --m 1
    python manage.py reconstruct1d --psi lg2 --eta dsigmoid:1
    python manage.py test
"""
import os
import sys

if __name__ == "__main__":
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "ridgenet.settings")

    from django.core.management import execute_from_command_line

    execute_from_command_line(sys.argv)
