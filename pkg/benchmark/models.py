from django.db import models


class ExperimentRun(models.Model):
    INDEX_CHOICES = [
        ('cr', 'Conceptual relevance'),
        ('stability', 'Stability'),
    ]
    SPLIT_CHOICES = [
        ('random', 'Random'),
        ('mirror', 'Mirror'),
    ]

    source = models.CharField(max_length=200)
    index_name = models.CharField(max_length=20, choices=INDEX_CHOICES, default='cr')
    activation = models.CharField(max_length=20, default='arithmetic')
    stability_method = models.CharField(max_length=10, default='brute')
    ratio = models.FloatField(default=0.5)
    seed = models.BigIntegerField(null=True, blank=True)
    split = models.CharField(max_length=10, choices=SPLIT_CHOICES, default='random')
    n = models.PositiveIntegerField(default=0)
    xi = models.FloatField(null=True, blank=True, help_text="Pearson coefficient; empty when undefined")
    tau_seconds = models.FloatField(default=0.0)
    dropped = models.PositiveIntegerField(default=0)
    created = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created', '-id']
        indexes = [
            models.Index(fields=['-created'], name='benchmark_run_created_idx'),
        ]

    def __str__(self):
        return f'{self.index_name} on {self.source} ({self.created:%Y-%m-%d %H:%M})'

    @property
    def xi_label(self):
        return 'undefined' if self.xi is None else repr(self.xi)

    def get_summary_row(self):
        return [self.index_name, self.activation, self.n, self.xi_label, self.tau_seconds]


class SharedConceptScore(models.Model):
    run = models.ForeignKey(ExperimentRun, related_name='scores', on_delete=models.CASCADE)
    intent = models.TextField(blank=True)
    x = models.FloatField()
    y = models.FloatField()
    reference_id = models.PositiveIntegerField()
    test_id = models.PositiveIntegerField()

    class Meta:
        ordering = ['id']

    def __str__(self):
        return f'{{{self.intent}}}'
