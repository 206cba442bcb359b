# vim: ts=4:sw=4:expandtabs

from django import forms
from django.conf import settings
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from skewcat.utils import COMMANDS, FUZZ, KINDS, CheckRequest, is_compatible

JSON = 'json'
TEXT = 'text'


def _choices(values):
    return [(value, value) for value in values]


class CheckRequestForm(forms.Form):
    """
    Form to validate the arguments of one skewcat run.
    """
    command = forms.ChoiceField(choices=_choices(COMMANDS), help_text=_('What to do with the fixture.'))
    kind = forms.ChoiceField(choices=_choices(KINDS), help_text=_('Which structure to look at.'))
    path = forms.CharField(
        required=False, max_length=4096,
        help_text=_('The fixture file. Not used by fuzz.')
    )
    output_format = forms.ChoiceField(
        choices=_choices((JSON, TEXT)), required=False,
        help_text=_('json (the default) or text.')
    )
    seed = forms.IntegerField(required=False, help_text=_('Seed for generated inputs.'))
    count = forms.IntegerField(required=False, min_value=1, help_text=_('How many inputs fuzz generates.'))

    def clean_output_format(self):
        return self.cleaned_data['output_format'] or JSON

    def clean_seed(self):
        seed = self.cleaned_data['seed']
        return settings.SKEWCAT_DEFAULT_SEED if seed is None else seed

    def clean_count(self):
        count = self.cleaned_data['count']
        return 1 if count is None else count

    def clean(self):
        """
        The command must accept the kind, and every command but fuzz needs a fixture.
        """
        cleaned_data = super().clean()
        command, kind = cleaned_data.get('command'), cleaned_data.get('kind')

        if command and kind and not is_compatible(command, kind):
            msg = _('{command} does not apply to {kind}.').format(command=command, kind=kind)
            raise ValidationError(msg)

        if command and command != FUZZ and not cleaned_data.get('path'):
            self.add_error('path', _('{command} needs a fixture file.').format(command=command))

        return cleaned_data

    def to_request(self):
        data = self.cleaned_data
        return CheckRequest(
            data['command'], data['kind'], data.get('path') or None, data['output_format'], data['seed'],
            data['count'],
        )
