from __future__ import annotations

import pytest

# criterion number -> (title, list of part outcomes); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[str, list[tuple[str, bool, str]]]] = {}


def record(num: int, title: str, part: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE.setdefault(num, (title, []))[1].append((part, ok, detail))


def acceptance_lines() -> list[str]:
    lines = []
    for num in sorted(ACCEPTANCE):
        title, parts = ACCEPTANCE[num]
        ok = all(p[1] for p in parts)
        failed = [f"{name}: {detail}" for name, good, detail in parts if not good]
        tail = f"  [{'; '.join(failed)}]" if failed else ""
        lines.append(f"{'PASS' if ok else 'FAIL'}  criterion {num}: {title}{tail}")
    return lines


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_lines():
        terminalreporter.write_line(line)
