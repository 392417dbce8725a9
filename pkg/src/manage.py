#!/usr/bin/env python
import os
import sys

if __name__ == "__main__":
    # manage.py uses the development settings by default. Set the
    # DJANGO_SETTINGS_MODULE environment variable to rabi.settings.production
    # for batch runs without log files.
    os.environ.setdefault("DJANGO_SETTINGS_MODULE",
                          "rabi.settings.development")

    from rabi.commandline import execute

    execute(sys.argv)
