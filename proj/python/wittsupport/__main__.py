import sys

from . import run_cli

code, text, diagnostics = run_cli(sys.argv[1:])
sys.stdout.write(text)
sys.stderr.write(diagnostics)
sys.exit(code)
