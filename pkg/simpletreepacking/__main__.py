#!/usr/bin/env python
# -*- coding: utf-8 -*-


import sys

from simpletreepacking.cli import main


sys.exit(main())
