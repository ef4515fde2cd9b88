public class GoalSliderListener implements ChangeListener {
  Translator translator;

  public void stateChanged(ChangeEvent ce) {
    JSlider srcSlider = (JSlider) ce.getSource();
    Goal d = (Goal) slidersToDecisions.get(srcSlider);
    JLabel valLab = (JLabel) slidersToDigits.get(srcSlider);
    int pri = srcSlider.getValue();
    d.setPriority(pri);
    if (pri == 0) {
      valLab.setText(translator.localize("label.off"));
    } else {
      valLab.setText(pri);
    }
  }
}
