from dataclasses import dataclass, field

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_ERROR = "error"
STATUS_CHOICES = [STATUS_PASS, STATUS_FAIL, STATUS_ERROR]


@dataclass
class Report:
    """
    Outcome of one command run.

    Note: every numeric classification keeps its residual in `residuals`, and a
    failed report carries its counterexample under `payload["counterexample"]`.

    """

    command: str
    status: str = STATUS_PASS
    payload: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)
    seed: int = 0
    tool_version: str = ""

    @property
    def passed(self) -> bool:
        return self.status == STATUS_PASS

    def fail(self, counterexample: dict, status: str = STATUS_FAIL):
        self.status = status
        self.payload["counterexample"] = counterexample
        return self

    def add_residual(self, name: str, value: float):
        # the worst residual wins when the same check runs many times
        self.residuals[name] = max(float(value), self.residuals.get(name, 0.0))
