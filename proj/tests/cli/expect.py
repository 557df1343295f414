"""Run a command and check its exit status and, optionally, a stdout substring.

usage: expect.py EXIT [SUBSTRING] -- CMD ARGS...
"""
import subprocess
import sys


def main() -> int:
    sep = sys.argv.index("--")
    head, cmd = sys.argv[1:sep], sys.argv[sep + 1:]
    expected = int(head[0])
    needle = head[1] if len(head) > 1 else None
    proc = subprocess.run(cmd, capture_output=True, text=True, timeout=120)
    if proc.returncode != expected:
        print(f"exit {proc.returncode}, expected {expected}\nstdout: {proc.stdout}\nstderr: {proc.stderr}")
        return 1
    if needle is not None and needle not in proc.stdout:
        print(f"missing {needle!r} in output:\n{proc.stdout}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
