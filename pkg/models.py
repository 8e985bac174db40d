from dataclasses import dataclass, field


@dataclass
class CheckResult:
    tag: str
    params: dict = field(default_factory=dict)
    passed: bool = True
    detail: str = ''

    def line(self):
        params = " ".join(f"{key}={value}" for key, value in self.params.items())
        text = f"{'PASS' if self.passed else 'FAIL'} {self.tag}"
        if params:
            text += f" {params}"
        if not self.passed and self.detail:
            text += f" ({self.detail})"
        return text

    def to_dict(self):
        return {
            'tag': self.tag,
            'params': {key: str(value) for key, value in self.params.items()},
            'passed': self.passed,
            'detail': self.detail,
        }


@dataclass
class Report:
    results: list = field(default_factory=list)

    def add(self, tag, passed, detail='', **params):
        result = CheckResult(tag, params, bool(passed), detail)
        self.results.append(result)
        return result

    def extend(self, other):
        self.results.extend(other.results)
        return self

    @property
    def passed(self):
        return all(result.passed for result in self.results)

    @property
    def failures(self):
        return [result for result in self.results if not result.passed]

    def lines(self):
        return [result.line() for result in self.results]

    def to_dict(self):
        return {
            'passed': self.passed,
            'results': [result.to_dict() for result in self.results],
        }


@dataclass
class CommandResult:
    """What a command hands back to the CLI or the HTTP layer."""
    text: str
    payload: object
    exit_code: int = 0
