from django.contrib import admin
from .models import ExperimentRun, SharedConceptScore


class SharedConceptScoreInline(admin.TabularInline):
    model = SharedConceptScore
    fields = ['intent', 'x', 'y', 'reference_id', 'test_id']
    readonly_fields = fields
    extra = 0
    can_delete = False


@admin.register(ExperimentRun)
class ExperimentRunAdmin(admin.ModelAdmin):
    list_display = ['id', 'source', 'index_name', 'activation', 'split', 'n', 'xi', 'tau_seconds', 'created']
    list_filter = ['index_name', 'split', 'created']
    search_fields = ['source']
    inlines = [SharedConceptScoreInline]
    date_hierarchy = 'created'
