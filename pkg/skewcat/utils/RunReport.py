# vim: ts=4:sw=4:expandtabs

import json

from django.conf import settings

from skewcat.skew import AxiomReport

EXIT_PASS = 0
EXIT_AXIOM_FAILURE = 1
EXIT_MALFORMED = 2
EXIT_PRECONDITION = 3


class RunReport(object):
    """
    Everything one run of the skewcat command produced: a header, the named AxiomReports,
    a payload of derived data and, when the run stopped early, the error.

    The JSON form is sorted, so a report depends only on its input, seed and thread cap.
    """
    def __init__(self, command, kind, source='', seed=None, threads=1, checks=None, payload=None, error=None):
        self.command = command
        self.kind = kind
        self.source = source
        self.seed = seed
        self.threads = threads
        self.checks = dict(checks or {})
        self.payload = dict(payload or {})
        self.error = error

    @property
    def header(self):
        return {
            'schema': settings.SKEWCAT_SCHEMA_VERSION,
            'command': self.command,
            'kind': self.kind,
            'input': self.source,
            'seed': self.seed,
            'threads': self.threads,
        }

    @property
    def passed(self):
        return all(report.passed for report in self.checks.values())

    @property
    def status(self):
        if self.error is not None:
            return self.error['status']
        return EXIT_PASS if self.passed else EXIT_AXIOM_FAILURE

    def fail(self, status, kind, message, path=None):
        self.error = {'status': status, 'type': kind, 'message': str(message)}
        if path is not None:
            self.error['path'] = path
        return self

    def to_json(self):
        data = {
            'header': self.header,
            'checks': {name: self.checks[name].to_json() for name in sorted(self.checks)},
            'payload': self.payload,
            'status': self.status,
        }
        if self.error is not None:
            data['error'] = self.error
        return data

    @classmethod
    def from_json(cls, data):
        header = data['header']
        return cls(
            header['command'], header['kind'], header.get('input', ''), header.get('seed'),
            header.get('threads', 1),
            {name: AxiomReport.from_json(report) for name, report in data.get('checks', {}).items()},
            data.get('payload'), data.get('error'),
        )

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, indent=2, ensure_ascii=False)

    def to_text(self):
        lines = ['{command} {kind} {input} (seed {seed}, threads {threads})'.format(**self.header)]
        for name in sorted(self.checks):
            report = self.checks[name]
            lines.append('[{0}] {1}'.format(name, report.subject))
            for result in report:
                lines.append('  {0:<28} {1:<4}  {2}'.format(result.axiom, result.status, result.law))
                if not result.passed and result.witness:
                    lines.append('      at {0}'.format(', '.join(map(str, result.witness))))
        for key in sorted(self.payload):
            lines.append('{0}: {1}'.format(key, json.dumps(self.payload[key], sort_keys=True, ensure_ascii=False)))
        if self.error is not None:
            where = ' at {0}'.format(self.error['path']) if 'path' in self.error else ''
            lines.append('error ({0}){1}: {2}'.format(self.error['type'], where, self.error['message']))
        lines.append('status {0}'.format(self.status))
        return '\n'.join(lines) + '\n'

    def __repr__(self):
        return '<RunReport {0} {1}: {2}>'.format(self.command, self.kind, self.status)
