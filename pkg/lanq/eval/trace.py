"""Step-by-step records of a run, written as JSON lines or aligned text."""

from collections import namedtuple
import json

TraceRecord = namedtuple(
    'TraceRecord', ['path', 'step', 'process', 'rule', 'weight', 'rendering']
)
TraceRecord.__doc__ = """
One evaluation step.

path is the index of the explored path, step the step number along it,
process the index of the process that moved (the sender for a
communication), weight the probability mass of the path so far and
rendering the configuration after the step, or None.
"""


class Trace:
    """
    The records of every step a run took, in the order they were taken.

    Args:
        render: Keep the rendered configuration in every record.
    """
    def __init__(self, render=False):
        self.render = render
        self.records = []

    def record(self, path, step, process, rule, weight, config=None):
        rendering = repr(config) if self.render and config is not None else None
        self.records.append(TraceRecord(path, step, process, rule, weight, rendering))

    def rule_names(self, path=0):
        return [record.rule for record in self.records if record.path == path]

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def to_jsonl(self):
        lines = []
        for record in self.records:
            entry = record._asdict()
            entry['weight'] = round(entry['weight'], 12)
            if entry['rendering'] is None:
                del entry['rendering']
            lines.append(json.dumps(entry, ensure_ascii=False, sort_keys=True))
        return '\n'.join(lines) + ('\n' if lines else '')

    def to_text(self):
        lines = []
        for record in self.records:
            line = f'{record.path:>4} {record.step:>6} {record.process:>3}  {record.rule:<22}' \
                f' {record.weight:.6f}'
            if record.rendering is not None:
                line += f'  {record.rendering}'
            lines.append(line)
        return '\n'.join(lines) + ('\n' if lines else '')

    def write(self, path):
        with open(path, 'w', encoding='utf-8') as trace_file:
            trace_file.write(self.to_jsonl())
