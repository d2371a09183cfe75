import sys

from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    verdicts = getattr(sys.modules.get("test_acceptance"), "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for ac in sorted(verdicts, key=lambda k: int(k[2:])):
        ok, detail = verdicts[ac]
        terminalreporter.write_line("%s %s  %s" % (ac, "PASS" if ok else "FAIL", detail))
