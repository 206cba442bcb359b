# vim: ts=4:sw=4:expandtabs

import logging

from django.core.management.base import BaseCommand, CommandError

from skewcat.forms import TEXT, CheckRequestForm
from skewcat.utils import EXIT_MALFORMED, EXIT_PASS, run

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Check, derive, roundtrip, classify, report on or fuzz skew monoidal structures.'

    def add_arguments(self, parser):
        parser.add_argument('command', help='validate, derive, roundtrip, classify, report or fuzz')
        parser.add_argument('kind', help='bimonoid, tricocycloid, fusion, warping, opmonoidal-monad, skew, '
                                         'category or quantum')
        parser.add_argument('file', nargs='?', default='', help='the fixture file')
        parser.add_argument('--format', dest='output_format', default='', help='json (default) or text')
        parser.add_argument('--seed', type=int, default=None)
        parser.add_argument('--count', type=int, default=None)

    def handle(self, *args, **options):
        form = CheckRequestForm({
            'command': options['command'],
            'kind': options['kind'],
            'path': options['file'],
            'output_format': options['output_format'],
            'seed': options['seed'],
            'count': options['count'],
        })
        if not form.is_valid():
            errors = '; '.join(
                '{0}: {1}'.format(field, ' '.join(messages)) if field != '__all__' else ' '.join(messages)
                for field, messages in form.errors.items()
            )
            raise CommandError(errors, returncode=EXIT_MALFORMED)

        request = form.to_request()
        report = run(request)
        output = report.to_text() if request.output_format == TEXT else report.dumps() + '\n'
        self.stdout.write(output, ending='')

        if report.status != EXIT_PASS:
            logger.info('%s %s finished with status %s', request.command, request.kind, report.status)
            raise CommandError('status {0}'.format(report.status), returncode=report.status)
