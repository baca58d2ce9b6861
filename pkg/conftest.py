import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "ridgenet.settings")
django.setup()
