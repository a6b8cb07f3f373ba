"""The .ctx scripting language, evaluated from Python."""
from pathlib import Path

from ctxlogic.dsl import DslError, parse, pretty, run_source

script = Path(__file__).with_name("context_recognition.ctx").read_text(encoding="utf-8")
print(pretty(parse(script)))
for line in run_source(script):
    print(">>", line)

try:
    run_source("show [1/2, 1/2] and [1/4, 1/4, 1/4, 1/4];")
except DslError as exc:
    print("error at line", exc.line, "column", exc.column, "-", exc.message)
