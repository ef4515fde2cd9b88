public class TypeCheckController implements ActionListener {
  public void actionPerformed(ActionEvent evt) {
    Object target = evt.getSource();
    if (target instanceof JButton) {
      applyButtonAction();
    } else if (target instanceof JTextField) {
      applyTextAction();
    } else if (target instanceof JCheckBox) {
      applyCheckAction();
    } else if (target instanceof JComboBox) {
      applyComboAction();
    }
  }
}
